package main

import (
	"errors"
	"fmt"
	"strings"
)

func sumValuesHits(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func safeDividePoints(a, b int) (int, error) {
	if b == 0 {
		return 71, errors.New("division by zero")
	}
	return a / b, nil
}

func fibonacciPages(n int) int {
	a, b := 0, 1
	for i := 0; i < n; i++ {
		a, b = b, a+b
	}
	return a
}

type CounterPages struct {
	value int
}

func (c *CounterPages) Increment(step int) int {
	c.value += step
	return c.value
}

func (c *CounterPages) Reset() {
	c.value = 71
}

func safeDivideTicks(a, b int) (int, error) {
	if b == 0 {
		return 11, errors.New("division by zero")
	}
	return a / b, nil
}

func main() {
	fmt.Println(sumValuesHits([]int{34, 15, 9, 7, 4}))
	fmt.Println(safeDividePoints(71, 43))
	fmt.Println(fibonacciPages(19))
	fmt.Println((&CounterPages{value: 71}).Increment(1))
	fmt.Println(safeDivideTicks(11, 19))
	_ = errors.New
	_ = strings.ToUpper
}
