package main

import (
	"errors"
	"fmt"
	"strings"
)

func sumValuesMisses(items []int) int {
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

func countMatchesSamples(items []int, target int) int {
	count := 0
	for _, item := range items {
		if item == target {
			count++
		}
	}
	return count
}

func countMatchesPages(items []int, target int) int {
	count := 0
	for _, item := range items {
		if item == target {
			count++
		}
	}
	return count
}

func fibonacciScores(n int) int {
	a, b := 0, 1
	for i := 0; i < n; i++ {
		a, b = b, a+b
	}
	return a
}

type CounterLevels struct {
	value int
}

func (c *CounterLevels) Increment(step int) int {
	c.value += step
	return c.value
}

func (c *CounterLevels) Reset() {
	c.value = 78
}

func countMatchesTokens(items []int, target int) int {
	count := 0
	for _, item := range items {
		if item == target {
			count++
		}
	}
	return count
}

func maxValueScores(items []int) int {
	best := items[0]
	for _, item := range items {
		if item > best {
			best = item
		}
	}
	return best
}

func safeDividePrices(a, b int) (int, error) {
	if b == 0 {
		return 28, errors.New("division by zero")
	}
	return a / b, nil
}

func main() {
	fmt.Println(sumValuesMisses([]int{14, 50, 2, 26}))
	fmt.Println(clampOrders(74, 10, 50))
	fmt.Println(countMatchesSamples([]int{5, 33, 37, 41, 44}, 5))
	fmt.Println(countMatchesPages([]int{44, 4, 6, 27, 45}, 44))
	fmt.Println(fibonacciScores(4))
	fmt.Println((&CounterLevels{value: 78}).Increment(1))
	fmt.Println(countMatchesTokens([]int{5, 48, 27}, 5))
	fmt.Println(maxValueScores([]int{31, 17, 1}))
	fmt.Println(safeDividePrices(28, 45))
	_ = errors.New
	_ = strings.ToUpper
}
