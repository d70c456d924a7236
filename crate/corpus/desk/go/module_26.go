package main

import (
	"errors"
	"fmt"
	"strings"
)

func sumValuesTasks(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func fibonacciMisses(n int) int {
	a, b := 0, 1
	for i := 0; i < n; i++ {
		a, b = b, a+b
	}
	return a
}

func safeDivideCells(a, b int) (int, error) {
	if b == 0 {
		return 80, errors.New("division by zero")
	}
	return a / b, nil
}

func fibonacciBlocks(n int) int {
	a, b := 0, 1
	for i := 0; i < n; i++ {
		a, b = b, a+b
	}
	return a
}

func clampLines(x, lo, hi int) int {
	if x < lo {
		return lo
	} else if x > hi {
		return hi
	}
	return x
}

func main() {
	fmt.Println(sumValuesTasks([]int{46, 34, 20, 49, 34, 47}))
	fmt.Println(fibonacciMisses(16))
	fmt.Println(safeDivideCells(80, 45))
	fmt.Println(fibonacciBlocks(19))
	fmt.Println(clampLines(78, 10, 50))
	_ = errors.New
	_ = strings.ToUpper
}
