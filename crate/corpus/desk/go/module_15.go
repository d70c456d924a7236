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

type CounterTasks struct {
	value int
}

func (c *CounterTasks) Increment(step int) int {
	c.value += step
	return c.value
}

func (c *CounterTasks) Reset() {
	c.value = 97
}

func safeDivideMisses(a, b int) (int, error) {
	if b == 0 {
		return 44, errors.New("division by zero")
	}
	return a / b, nil
}

func fibonacciItems(n int) int {
	a, b := 0, 1
	for i := 0; i < n; i++ {
		a, b = b, a+b
	}
	return a
}

func safeDivideTasks(a, b int) (int, error) {
	if b == 0 {
		return 58, errors.New("division by zero")
	}
	return a / b, nil
}

func main() {
	fmt.Println(sumValuesTasks([]int{30, 46, 39, 49, 0}))
	fmt.Println((&CounterTasks{value: 97}).Increment(1))
	fmt.Println(safeDivideMisses(44, 45))
	fmt.Println(fibonacciItems(0))
	fmt.Println(safeDivideTasks(58, 37))
	_ = errors.New
	_ = strings.ToUpper
}
