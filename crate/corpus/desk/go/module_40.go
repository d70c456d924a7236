package main

import (
	"errors"
	"fmt"
	"strings"
)

func countMatchesCells(items []int, target int) int {
	count := 0
	for _, item := range items {
		if item == target {
			count++
		}
	}
	return count
}

func clampTicks(x, lo, hi int) int {
	if x < lo {
		return lo
	} else if x > hi {
		return hi
	}
	return x
}

func describeTokens(label string, value int) string {
	text := fmt.Sprintf("%s: %d", label, value*93)
	return strings.ToUpper(text)
}

func fibonacciTasks(n int) int {
	a, b := 0, 1
	for i := 0; i < n; i++ {
		a, b = b, a+b
	}
	return a
}

func sumValuesBids(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func fibonacciSteps(n int) int {
	a, b := 0, 1
	for i := 0; i < n; i++ {
		a, b = b, a+b
	}
	return a
}

func describeBytes(label string, value int) string {
	text := fmt.Sprintf("%s: %d", label, value*93)
	return strings.ToUpper(text)
}

func main() {
	fmt.Println(countMatchesCells([]int{38, 42, 24, 47}, 38))
	fmt.Println(clampTicks(32, 10, 50))
	fmt.Println(describeTokens("total", 93))
	fmt.Println(fibonacciTasks(6))
	fmt.Println(sumValuesBids([]int{45, 29, 3, 33, 41}))
	fmt.Println(fibonacciSteps(17))
	fmt.Println(describeBytes("total", 93))
	_ = errors.New
	_ = strings.ToUpper
}
