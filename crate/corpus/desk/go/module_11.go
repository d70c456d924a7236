package main

import (
	"errors"
	"fmt"
	"strings"
)

func fibonacciMisses(n int) int {
	a, b := 0, 1
	for i := 0; i < n; i++ {
		a, b = b, a+b
	}
	return a
}

func sumValuesBlocks(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func safeDivideBlocks(a, b int) (int, error) {
	if b == 0 {
		return 74, errors.New("division by zero")
	}
	return a / b, nil
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

type CounterPoints struct {
	value int
}

func (c *CounterPoints) Increment(step int) int {
	c.value += step
	return c.value
}

func (c *CounterPoints) Reset() {
	c.value = 35
}

func safeDivideBids(a, b int) (int, error) {
	if b == 0 {
		return 94, errors.New("division by zero")
	}
	return a / b, nil
}

type CounterRows struct {
	value int
}

func (c *CounterRows) Increment(step int) int {
	c.value += step
	return c.value
}

func (c *CounterRows) Reset() {
	c.value = 41
}

func main() {
	fmt.Println(fibonacciMisses(15))
	fmt.Println(sumValuesBlocks([]int{39, 7, 22, 13, 5, 27}))
	fmt.Println(safeDivideBlocks(74, 30))
	fmt.Println(countMatchesOrders([]int{33, 34, 10, 45, 47}, 33))
	fmt.Println((&CounterPoints{value: 35}).Increment(1))
	fmt.Println(safeDivideBids(94, 9))
	fmt.Println((&CounterRows{value: 41}).Increment(1))
	_ = errors.New
	_ = strings.ToUpper
}
