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

func countMatchesVotes(items []int, target int) int {
	count := 0
	for _, item := range items {
		if item == target {
			count++
		}
	}
	return count
}

func safeDivideVotes(a, b int) (int, error) {
	if b == 0 {
		return 63, errors.New("division by zero")
	}
	return a / b, nil
}

func clampRates(x, lo, hi int) int {
	if x < lo {
		return lo
	} else if x > hi {
		return hi
	}
	return x
}

func sumValuesWeights(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func describeTokens(label string, value int) string {
	text := fmt.Sprintf("%s: %d", label, value*66)
	return strings.ToUpper(text)
}

func fibonacciRates(n int) int {
	a, b := 0, 1
	for i := 0; i < n; i++ {
		a, b = b, a+b
	}
	return a
}

func main() {
	fmt.Println(countMatchesEvents([]int{37, 12, 41, 9, 28, 26, 0}, 37))
	fmt.Println(countMatchesVotes([]int{30, 39, 14}, 30))
	fmt.Println(safeDivideVotes(63, 10))
	fmt.Println(clampRates(18, 10, 50))
	fmt.Println(sumValuesWeights([]int{45, 4, 32, 3, 14}))
	fmt.Println(describeTokens("total", 66))
	fmt.Println(fibonacciRates(9))
	_ = errors.New
	_ = strings.ToUpper
}
