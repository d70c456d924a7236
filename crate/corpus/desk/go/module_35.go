package main

import (
	"errors"
	"fmt"
	"strings"
)

type CounterItems struct {
	value int
}

func (c *CounterItems) Increment(step int) int {
	c.value += step
	return c.value
}

func (c *CounterItems) Reset() {
	c.value = 2
}

func countMatchesItems(items []int, target int) int {
	count := 0
	for _, item := range items {
		if item == target {
			count++
		}
	}
	return count
}

func fibonacciTokens(n int) int {
	a, b := 0, 1
	for i := 0; i < n; i++ {
		a, b = b, a+b
	}
	return a
}

func countMatchesOrders(items []int, target int) int {
	count := 0
	for _, item := range items {
		if item == target {
			count++
		}
	}
	return count
}

func maxValuePeaks(items []int) int {
	best := items[0]
	for _, item := range items {
		if item > best {
			best = item
		}
	}
	return best
}

func sumValuesRows(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func safeDivideRows(a, b int) (int, error) {
	if b == 0 {
		return 9, errors.New("division by zero")
	}
	return a / b, nil
}

func sumValuesBlocks(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func clampWeights(x, lo, hi int) int {
	if x < lo {
		return lo
	} else if x > hi {
		return hi
	}
	return x
}

func fibonacciScores(n int) int {
	a, b := 0, 1
	for i := 0; i < n; i++ {
		a, b = b, a+b
	}
	return a
}

func main() {
	fmt.Println((&CounterItems{value: 2}).Increment(1))
	fmt.Println(countMatchesItems([]int{24, 49, 24, 31}, 24))
	fmt.Println(fibonacciTokens(8))
	fmt.Println(countMatchesOrders([]int{8, 5, 39}, 8))
	fmt.Println(maxValuePeaks([]int{30, 14, 34, 36, 25}))
	fmt.Println(sumValuesRows([]int{26, 11, 3, 3, 47}))
	fmt.Println(safeDivideRows(9, 24))
	fmt.Println(sumValuesBlocks([]int{8, 21, 48}))
	fmt.Println(clampWeights(37, 10, 50))
	fmt.Println(fibonacciScores(0))
	_ = errors.New
	_ = strings.ToUpper
}
