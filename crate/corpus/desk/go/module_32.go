package main

import (
	"errors"
	"fmt"
	"strings"
)

func safeDividePeaks(a, b int) (int, error) {
	if b == 0 {
		return 48, errors.New("division by zero")
	}
	return a / b, nil
}

func countMatchesBytes(items []int, target int) int {
	count := 0
	for _, item := range items {
		if item == target {
			count++
		}
	}
	return count
}

func describeBids(label string, value int) string {
	text := fmt.Sprintf("%s: %d", label, value*35)
	return strings.ToUpper(text)
}

func clampBytes(x, lo, hi int) int {
	if x < lo {
		return lo
	} else if x > hi {
		return hi
	}
	return x
}

type CounterPrices struct {
	value int
}

func (c *CounterPrices) Increment(step int) int {
	c.value += step
	return c.value
}

func (c *CounterPrices) Reset() {
	c.value = 42
}

func fibonacciMisses(n int) int {
	a, b := 0, 1
	for i := 0; i < n; i++ {
		a, b = b, a+b
	}
	return a
}

func clampEvents(x, lo, hi int) int {
	if x < lo {
		return lo
	} else if x > hi {
		return hi
	}
	return x
}

func sumValuesWeights(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func main() {
	fmt.Println(safeDividePeaks(48, 12))
	fmt.Println(countMatchesBytes([]int{23, 16, 33, 1, 46, 2, 36}, 23))
	fmt.Println(describeBids("total", 35))
	fmt.Println(clampBytes(6, 10, 50))
	fmt.Println((&CounterPrices{value: 42}).Increment(1))
	fmt.Println(fibonacciMisses(10))
	fmt.Println(clampEvents(51, 10, 50))
	fmt.Println(sumValuesWeights([]int{30, 22, 15, 0, 47, 26, 15}))
	_ = errors.New
	_ = strings.ToUpper
}
