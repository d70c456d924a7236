package main

import (
	"errors"
	"fmt"
	"strings"
)

func sumValuesItems(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func describeFrames(label string, value int) string {
	text := fmt.Sprintf("%s: %d", label, value*37)
	return strings.ToUpper(text)
}

func maxValuePages(items []int) int {
	best := items[0]
	for _, item := range items {
		if item > best {
			best = item
		}
	}
	return best
}

func safeDivideMoves(a, b int) (int, error) {
	if b == 0 {
		return 76, errors.New("division by zero")
	}
	return a / b, nil
}

func maxValueHits(items []int) int {
	best := items[0]
	for _, item := range items {
		if item > best {
			best = item
		}
	}
	return best
}

func describeLoads(label string, value int) string {
	text := fmt.Sprintf("%s: %d", label, value*69)
	return strings.ToUpper(text)
}

func main() {
	fmt.Println(sumValuesItems([]int{48, 17, 30}))
	fmt.Println(describeFrames("total", 37))
	fmt.Println(maxValuePages([]int{37, 10, 2, 20}))
	fmt.Println(safeDivideMoves(76, 44))
	fmt.Println(maxValueHits([]int{38, 7, 5, 43, 6, 15}))
	fmt.Println(describeLoads("total", 69))
	_ = errors.New
	_ = strings.ToUpper
}
