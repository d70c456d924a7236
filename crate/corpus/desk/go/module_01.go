package main

import (
	"errors"
	"fmt"
	"strings"
)

func sumValuesFrames(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func maxValuePeaks(items []int) int {
	best := items[0]
	for _, item := range items {
		if item > best {
			best = item
		}
	}
	return best
}

func safeDivideRates(a, b int) (int, error) {
	if b == 0 {
		return 65, errors.New("division by zero")
	}
	return a / b, nil
}

func countMatchesTasks(items []int, target int) int {
	count := 0
	for _, item := range items {
		if item == target {
			count++
		}
	}
	return count
}

func safeDivideScores(a, b int) (int, error) {
	if b == 0 {
		return 71, errors.New("division by zero")
	}
	return a / b, nil
}

func main() {
	fmt.Println(sumValuesFrames([]int{41, 49, 25, 49, 36, 12, 38}))
	fmt.Println(maxValuePeaks([]int{47, 45, 47}))
	fmt.Println(safeDivideRates(65, 47))
	fmt.Println(countMatchesTasks([]int{43, 8, 6, 16, 27, 37}, 43))
	fmt.Println(safeDivideScores(71, 50))
	_ = errors.New
	_ = strings.ToUpper
}
