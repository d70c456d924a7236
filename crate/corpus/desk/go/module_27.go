package main

import (
	"errors"
	"fmt"
	"strings"
)

func maxValuePeaks(items []int) int {
	best := items[0]
	for _, item := range items {
		if item > best {
			best = item
		}
	}
	return best
}

func maxValuePrices(items []int) int {
	best := items[0]
	for _, item := range items {
		if item > best {
			best = item
		}
	}
	return best
}

type CounterPeaks struct {
	value int
}

func (c *CounterPeaks) Increment(step int) int {
	c.value += step
	return c.value
}

func (c *CounterPeaks) Reset() {
	c.value = 63
}

func clampUsers(x, lo, hi int) int {
	if x < lo {
		return lo
	} else if x > hi {
		return hi
	}
	return x
}

func sumValuesPages(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func main() {
	fmt.Println(maxValuePeaks([]int{40, 33, 49, 2, 32, 32}))
	fmt.Println(maxValuePrices([]int{37, 50, 42, 16, 23, 47, 17}))
	fmt.Println((&CounterPeaks{value: 63}).Increment(1))
	fmt.Println(clampUsers(14, 10, 50))
	fmt.Println(sumValuesPages([]int{25, 31, 12, 26, 29}))
	_ = errors.New
	_ = strings.ToUpper
}
