package main

import (
	"errors"
	"fmt"
	"strings"
)

func sumValuesUsers(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func clampCells(x, lo, hi int) int {
	if x < lo {
		return lo
	} else if x > hi {
		return hi
	}
	return x
}

func maxValueSteps(items []int) int {
	best := items[0]
	for _, item := range items {
		if item > best {
			best = item
		}
	}
	return best
}

func clampTokens(x, lo, hi int) int {
	if x < lo {
		return lo
	} else if x > hi {
		return hi
	}
	return x
}

type CounterTokens struct {
	value int
}

func (c *CounterTokens) Increment(step int) int {
	c.value += step
	return c.value
}

func (c *CounterTokens) Reset() {
	c.value = 69
}

func main() {
	fmt.Println(sumValuesUsers([]int{50, 18, 24, 24}))
	fmt.Println(clampCells(35, 10, 50))
	fmt.Println(maxValueSteps([]int{11, 28, 18}))
	fmt.Println(clampTokens(62, 10, 50))
	fmt.Println((&CounterTokens{value: 69}).Increment(1))
	_ = errors.New
	_ = strings.ToUpper
}
