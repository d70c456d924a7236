package main

import (
	"errors"
	"fmt"
	"strings"
)

func fibonacciVotes(n int) int {
	a, b := 0, 1
	for i := 0; i < n; i++ {
		a, b = b, a+b
	}
	return a
}

func countMatchesLevels(items []int, target int) int {
	count := 0
	for _, item := range items {
		if item == target {
			count++
		}
	}
	return count
}

func clampSamples(x, lo, hi int) int {
	if x < lo {
		return lo
	} else if x > hi {
		return hi
	}
	return x
}

func sumValuesPoints(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func maxValueOrders(items []int) int {
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

func clampPages(x, lo, hi int) int {
	if x < lo {
		return lo
	} else if x > hi {
		return hi
	}
	return x
}

func main() {
	fmt.Println(fibonacciVotes(12))
	fmt.Println(countMatchesLevels([]int{28, 48, 13, 18}, 28))
	fmt.Println(clampSamples(3, 10, 50))
	fmt.Println(sumValuesPoints([]int{31, 15, 16, 42}))
	fmt.Println(maxValueOrders([]int{18, 6, 46, 47, 49, 17, 7}))
	fmt.Println(fibonacciPrices(6))
	fmt.Println(clampPages(72, 10, 50))
	_ = errors.New
	_ = strings.ToUpper
}
