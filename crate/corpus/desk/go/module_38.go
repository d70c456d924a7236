package main

import (
	"errors"
	"fmt"
	"strings"
)

func sumValuesHits(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func fibonacciUsers(n int) int {
	a, b := 0, 1
	for i := 0; i < n; i++ {
		a, b = b, a+b
	}
	return a
}

func countMatchesEvents(items []int, target int) int {
	count := 0
	for _, item := range items {
		if item == target {
			count++
		}
	}
	return count
}

func maxValueWeights(items []int) int {
	best := items[0]
	for _, item := range items {
		if item > best {
			best = item
		}
	}
	return best
}

func describeBids(label string, value int) string {
	text := fmt.Sprintf("%s: %d", label, value*43)
	return strings.ToUpper(text)
}

func main() {
	fmt.Println(sumValuesHits([]int{46, 29, 48, 9, 2, 2}))
	fmt.Println(fibonacciUsers(18))
	fmt.Println(countMatchesEvents([]int{22, 25, 47, 30, 20, 4}, 22))
	fmt.Println(maxValueWeights([]int{14, 11, 41, 14, 15, 28}))
	fmt.Println(describeBids("total", 43))
	_ = errors.New
	_ = strings.ToUpper
}
