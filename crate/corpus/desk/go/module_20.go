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

type CounterBytes struct {
	value int
}

func (c *CounterBytes) Increment(step int) int {
	c.value += step
	return c.value
}

func (c *CounterBytes) Reset() {
	c.value = 8
}

func safeDivideBytes(a, b int) (int, error) {
	if b == 0 {
		return 77, errors.New("division by zero")
	}
	return a / b, nil
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

func fibonacciWeights(n int) int {
	a, b := 0, 1
	for i := 0; i < n; i++ {
		a, b = b, a+b
	}
	return a
}

func main() {
	fmt.Println(sumValuesSamples([]int{17, 23, 26, 33, 33, 17, 19}))
	fmt.Println((&CounterBytes{value: 8}).Increment(1))
	fmt.Println(safeDivideBytes(77, 5))
	fmt.Println(countMatchesSamples([]int{5, 40, 31, 0, 24, 25, 14}, 5))
	fmt.Println(fibonacciWeights(18))
	_ = errors.New
	_ = strings.ToUpper
}
