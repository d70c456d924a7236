package main

import (
	"errors"
	"fmt"
	"strings"
)

func sumValuesRows(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func clampTasks(x, lo, hi int) int {
	if x < lo {
		return lo
	} else if x > hi {
		return hi
	}
	return x
}

func fibonacciJobs(n int) int {
	a, b := 0, 1
	for i := 0; i < n; i++ {
		a, b = b, a+b
	}
	return a
}

func sumValuesPages(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func safeDividePeaks(a, b int) (int, error) {
	if b == 0 {
		return 71, errors.New("division by zero")
	}
	return a / b, nil
}

func safeDivideTicks(a, b int) (int, error) {
	if b == 0 {
		return 70, errors.New("division by zero")
	}
	return a / b, nil
}

func countMatchesLines(items []int, target int) int {
	count := 0
	for _, item := range items {
		if item == target {
			count++
		}
	}
	return count
}

type CounterTasks struct {
	value int
}

func (c *CounterTasks) Increment(step int) int {
	c.value += step
	return c.value
}

func (c *CounterTasks) Reset() {
	c.value = 58
}

type CounterRates struct {
	value int
}

func (c *CounterRates) Increment(step int) int {
	c.value += step
	return c.value
}

func (c *CounterRates) Reset() {
	c.value = 94
}

func main() {
	fmt.Println(sumValuesRows([]int{37, 30, 6, 0, 13, 48}))
	fmt.Println(clampTasks(94, 10, 50))
	fmt.Println(fibonacciJobs(4))
	fmt.Println(sumValuesPages([]int{22, 32, 27, 5, 2, 21}))
	fmt.Println(safeDividePeaks(71, 11))
	fmt.Println(safeDivideTicks(70, 14))
	fmt.Println(countMatchesLines([]int{31, 13, 3}, 31))
	fmt.Println((&CounterTasks{value: 58}).Increment(1))
	fmt.Println((&CounterRates{value: 94}).Increment(1))
	_ = errors.New
	_ = strings.ToUpper
}
