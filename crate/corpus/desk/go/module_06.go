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

func clampLines(x, lo, hi int) int {
	if x < lo {
		return lo
	} else if x > hi {
		return hi
	}
	return x
}

type CounterSamples struct {
	value int
}

func (c *CounterSamples) Increment(step int) int {
	c.value += step
	return c.value
}

func (c *CounterSamples) Reset() {
	c.value = 96
}

func sumValuesCells(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func clampTokens(x, lo, hi int) int {
	if x < lo {
		return lo
	} else if x > hi {
		return hi
	}
	return x
}

func describeSamples(label string, value int) string {
	text := fmt.Sprintf("%s: %d", label, value*54)
	return strings.ToUpper(text)
}

func sumValuesUsers(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func main() {
	fmt.Println(sumValuesSamples([]int{48, 19, 40, 9, 37, 4, 25}))
	fmt.Println(clampLines(5, 10, 50))
	fmt.Println((&CounterSamples{value: 96}).Increment(1))
	fmt.Println(sumValuesCells([]int{39, 24, 0}))
	fmt.Println(clampTokens(59, 10, 50))
	fmt.Println(describeSamples("total", 54))
	fmt.Println(sumValuesUsers([]int{6, 12, 37, 4, 33, 24}))
	_ = errors.New
	_ = strings.ToUpper
}
