package main

import (
	"errors"
	"fmt"
	"strings"
)

func sumValuesSamples(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func clampHits(x, lo, hi int) int {
	if x < lo {
		return lo
	} else if x > hi {
		return hi
	}
	return x
}

func maxValueRates(items []int) int {
	best := items[0]
	for _, item := range items {
		if item > best {
			best = item
		}
	}
	return best
}

func describeMisses(label string, value int) string {
	text := fmt.Sprintf("%s: %d", label, value*17)
	return strings.ToUpper(text)
}

func fibonacciTasks(n int) int {
	a, b := 0, 1
	for i := 0; i < n; i++ {
		a, b = b, a+b
	}
	return a
}

func maxValuePoints(items []int) int {
	best := items[0]
	for _, item := range items {
		if item > best {
			best = item
		}
	}
	return best
}

func fibonacciPrices(n int) int {
	a, b := 0, 1
	for i := 0; i < n; i++ {
		a, b = b, a+b
	}
	return a
}

func fibonacciMisses(n int) int {
	a, b := 0, 1
	for i := 0; i < n; i++ {
		a, b = b, a+b
	}
	return a
}

func main() {
	fmt.Println(sumValuesSamples([]int{30, 33, 40, 27, 39}))
	fmt.Println(clampHits(76, 10, 50))
	fmt.Println(maxValueRates([]int{4, 40, 29, 16, 28, 8}))
	fmt.Println(describeMisses("total", 17))
	fmt.Println(fibonacciTasks(0))
	fmt.Println(maxValuePoints([]int{19, 50, 1, 41, 35, 41}))
	fmt.Println(fibonacciPrices(16))
	fmt.Println(fibonacciMisses(16))
	_ = errors.New
	_ = strings.ToUpper
}
