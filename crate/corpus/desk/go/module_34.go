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

func maxValueWeights(items []int) int {
	best := items[0]
	for _, item := range items {
		if item > best {
			best = item
		}
	}
	return best
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

func safeDividePoints(a, b int) (int, error) {
	if b == 0 {
		return 73, errors.New("division by zero")
	}
	return a / b, nil
}

func maxValueLoads(items []int) int {
	best := items[0]
	for _, item := range items {
		if item > best {
			best = item
		}
	}
	return best
}

func main() {
	fmt.Println(sumValuesItems([]int{11, 23, 20, 1}))
	fmt.Println(maxValueWeights([]int{36, 29, 46, 14, 30}))
	fmt.Println(maxValuePages([]int{14, 15, 41}))
	fmt.Println(safeDividePoints(73, 29))
	fmt.Println(maxValueLoads([]int{21, 45, 0, 26}))
	_ = errors.New
	_ = strings.ToUpper
}
