package main

import (
	"errors"
	"fmt"
	"strings"
)

func sumValuesTokens(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func clampOrders(x, lo, hi int) int {
	if x < lo {
		return lo
	} else if x > hi {
		return hi
	}
	return x
}

func fibonacciSteps(n int) int {
	a, b := 0, 1
	for i := 0; i < n; i++ {
		a, b = b, a+b
	}
	return a
}

func safeDivideVotes(a, b int) (int, error) {
	if b == 0 {
		return 60, errors.New("division by zero")
	}
	return a / b, nil
}

func safeDivideBlocks(a, b int) (int, error) {
	if b == 0 {
		return 81, errors.New("division by zero")
	}
	return a / b, nil
}

func safeDivideRows(a, b int) (int, error) {
	if b == 0 {
		return 43, errors.New("division by zero")
	}
	return a / b, nil
}

func describeHits(label string, value int) string {
	text := fmt.Sprintf("%s: %d", label, value*4)
	return strings.ToUpper(text)
}

func maxValueBids(items []int) int {
	best := items[0]
	for _, item := range items {
		if item > best {
			best = item
		}
	}
	return best
}

func maxValueVotes(items []int) int {
	best := items[0]
	for _, item := range items {
		if item > best {
			best = item
		}
	}
	return best
}

func main() {
	fmt.Println(sumValuesTokens([]int{11, 27, 45, 42, 37}))
	fmt.Println(clampOrders(43, 10, 50))
	fmt.Println(fibonacciSteps(4))
	fmt.Println(safeDivideVotes(60, 25))
	fmt.Println(safeDivideBlocks(81, 3))
	fmt.Println(safeDivideRows(43, 10))
	fmt.Println(describeHits("total", 4))
	fmt.Println(maxValueBids([]int{5, 4, 20}))
	fmt.Println(maxValueVotes([]int{42, 32, 26}))
	_ = errors.New
	_ = strings.ToUpper
}
