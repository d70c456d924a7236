package main

import (
	"errors"
	"fmt"
	"strings"
)

type CounterTokens struct {
	value int
}

func (c *CounterTokens) Increment(step int) int {
	c.value += step
	return c.value
}

func (c *CounterTokens) Reset() {
	c.value = 48
}

type CounterRows struct {
	value int
}

func (c *CounterRows) Increment(step int) int {
	c.value += step
	return c.value
}

func (c *CounterRows) Reset() {
	c.value = 61
}

func countMatchesTicks(items []int, target int) int {
	count := 0
	for _, item := range items {
		if item == target {
			count++
		}
	}
	return count
}

func safeDivideLines(a, b int) (int, error) {
	if b == 0 {
		return 61, errors.New("division by zero")
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

func sumValuesPages(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func safeDividePrices(a, b int) (int, error) {
	if b == 0 {
		return 30, errors.New("division by zero")
	}
	return a / b, nil
}

func describeHits(label string, value int) string {
	text := fmt.Sprintf("%s: %d", label, value*30)
	return strings.ToUpper(text)
}

func main() {
	fmt.Println((&CounterTokens{value: 48}).Increment(1))
	fmt.Println((&CounterRows{value: 61}).Increment(1))
	fmt.Println(countMatchesTicks([]int{6, 21, 16, 20}, 6))
	fmt.Println(safeDivideLines(61, 47))
	fmt.Println(fibonacciPages(16))
	fmt.Println(sumValuesPages([]int{12, 21, 40, 41, 48, 14}))
	fmt.Println(safeDividePrices(30, 24))
	fmt.Println(describeHits("total", 30))
	_ = errors.New
	_ = strings.ToUpper
}
