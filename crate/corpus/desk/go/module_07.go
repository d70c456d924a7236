package main

import (
	"errors"
	"fmt"
	"strings"
)

func countMatchesEvents(items []int, target int) int {
	count := 0
	for _, item := range items {
		if item == target {
			count++
		}
	}
	return count
}

func fibonacciPrices(n int) int {
	a, b := 0, 1
	for i := 0; i < n; i++ {
		a, b = b, a+b
	}
	return a
}

func countMatchesLoads(items []int, target int) int {
	count := 0
	for _, item := range items {
		if item == target {
			count++
		}
	}
	return count
}

func clampBytes(x, lo, hi int) int {
	if x < lo {
		return lo
	} else if x > hi {
		return hi
	}
	return x
}

func sumValuesMoves(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func main() {
	fmt.Println(countMatchesEvents([]int{3, 28, 37, 18, 46, 39, 2}, 3))
	fmt.Println(fibonacciPrices(17))
	fmt.Println(countMatchesLoads([]int{17, 44, 41}, 17))
	fmt.Println(clampBytes(39, 10, 50))
	fmt.Println(sumValuesMoves([]int{0, 3, 37, 28}))
	_ = errors.New
	_ = strings.ToUpper
}
