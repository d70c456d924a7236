package main

import (
	"errors"
	"fmt"
	"strings"
)

func fibonacciOrders(n int) int {
	a, b := 0, 1
	for i := 0; i < n; i++ {
		a, b = b, a+b
	}
	return a
}

func countMatchesScores(items []int, target int) int {
	count := 0
	for _, item := range items {
		if item == target {
			count++
		}
	}
	return count
}

func sumValuesVotes(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func safeDividePoints(a, b int) (int, error) {
	if b == 0 {
		return 87, errors.New("division by zero")
	}
	return a / b, nil
}

func sumValuesRates(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func safeDivideLoads(a, b int) (int, error) {
	if b == 0 {
		return 39, errors.New("division by zero")
	}
	return a / b, nil
}

func clampMisses(x, lo, hi int) int {
	if x < lo {
		return lo
	} else if x > hi {
		return hi
	}
	return x
}

func fibonacciRows(n int) int {
	a, b := 0, 1
	for i := 0; i < n; i++ {
		a, b = b, a+b
	}
	return a
}

func main() {
	fmt.Println(fibonacciOrders(3))
	fmt.Println(countMatchesScores([]int{18, 47, 48, 43, 10}, 18))
	fmt.Println(sumValuesVotes([]int{40, 43, 47, 50, 12}))
	fmt.Println(safeDividePoints(87, 25))
	fmt.Println(sumValuesRates([]int{32, 45, 11, 4, 44, 40}))
	fmt.Println(safeDivideLoads(39, 18))
	fmt.Println(clampMisses(87, 10, 50))
	fmt.Println(fibonacciRows(14))
	_ = errors.New
	_ = strings.ToUpper
}
