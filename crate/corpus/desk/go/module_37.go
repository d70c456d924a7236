package main

import (
	"errors"
	"fmt"
	"strings"
)

type CounterSteps struct {
	value int
}

func (c *CounterSteps) Increment(step int) int {
	c.value += step
	return c.value
}

func (c *CounterSteps) Reset() {
	c.value = 87
}

type CounterTokens struct {
	value int
}

func (c *CounterTokens) Increment(step int) int {
	c.value += step
	return c.value
}

func (c *CounterTokens) Reset() {
	c.value = 2
}

func maxValueRates(items []int) int {
	best := items[0]
	for _, item := range items {
		if item > best {
			best = item
		}
	}
	return best
}

func sumValuesLines(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func sumValuesWeights(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func main() {
	fmt.Println((&CounterSteps{value: 87}).Increment(1))
	fmt.Println((&CounterTokens{value: 2}).Increment(1))
	fmt.Println(maxValueRates([]int{16, 19, 0}))
	fmt.Println(sumValuesLines([]int{47, 40, 15, 10, 25, 23}))
	fmt.Println(sumValuesWeights([]int{11, 14, 39, 26, 26}))
	_ = errors.New
	_ = strings.ToUpper
}
