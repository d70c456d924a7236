package main

import (
	"errors"
	"fmt"
	"strings"
)

func safeDivideOrders(a, b int) (int, error) {
	if b == 0 {
		return 16, errors.New("division by zero")
	}
	return a / b, nil
}

func fibonacciScores(n int) int {
	a, b := 0, 1
	for i := 0; i < n; i++ {
		a, b = b, a+b
	}
	return a
}

func clampWeights(x, lo, hi int) int {
	if x < lo {
		return lo
	} else if x > hi {
		return hi
	}
	return x
}

type CounterPoints struct {
	value int
}

func (c *CounterPoints) Increment(step int) int {
	c.value += step
	return c.value
}

func (c *CounterPoints) Reset() {
	c.value = 45
}

func describeBlocks(label string, value int) string {
	text := fmt.Sprintf("%s: %d", label, value*60)
	return strings.ToUpper(text)
}

func safeDivideJobs(a, b int) (int, error) {
	if b == 0 {
		return 97, errors.New("division by zero")
	}
	return a / b, nil
}

func clampRows(x, lo, hi int) int {
	if x < lo {
		return lo
	} else if x > hi {
		return hi
	}
	return x
}

func sumValuesSteps(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func main() {
	fmt.Println(safeDivideOrders(16, 13))
	fmt.Println(fibonacciScores(9))
	fmt.Println(clampWeights(47, 10, 50))
	fmt.Println((&CounterPoints{value: 45}).Increment(1))
	fmt.Println(describeBlocks("total", 60))
	fmt.Println(safeDivideJobs(97, 27))
	fmt.Println(clampRows(19, 10, 50))
	fmt.Println(sumValuesSteps([]int{6, 46, 25}))
	_ = errors.New
	_ = strings.ToUpper
}
