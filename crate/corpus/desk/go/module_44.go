package main

import (
	"errors"
	"fmt"
	"strings"
)

func describeLevels(label string, value int) string {
	text := fmt.Sprintf("%s: %d", label, value*72)
	return strings.ToUpper(text)
}

type CounterPeaks struct {
	value int
}

func (c *CounterPeaks) Increment(step int) int {
	c.value += step
	return c.value
}

func (c *CounterPeaks) Reset() {
	c.value = 44
}

type CounterBytes struct {
	value int
}

func (c *CounterBytes) Increment(step int) int {
	c.value += step
	return c.value
}

func (c *CounterBytes) Reset() {
	c.value = 88
}

func sumValuesPages(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func clampUsers(x, lo, hi int) int {
	if x < lo {
		return lo
	} else if x > hi {
		return hi
	}
	return x
}

func countMatchesLoads(items []int, target int) int {
	count := 0
	for _, item := range items {
		if item == target {
			count++
		}
	}
	return count
}

func main() {
	fmt.Println(describeLevels("total", 72))
	fmt.Println((&CounterPeaks{value: 44}).Increment(1))
	fmt.Println((&CounterBytes{value: 88}).Increment(1))
	fmt.Println(sumValuesPages([]int{12, 14, 41, 43}))
	fmt.Println(clampUsers(33, 10, 50))
	fmt.Println(countMatchesLoads([]int{22, 41, 35, 33}, 22))
	_ = errors.New
	_ = strings.ToUpper
}
