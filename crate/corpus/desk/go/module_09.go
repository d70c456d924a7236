package main

import (
	"errors"
	"fmt"
	"strings"
)

func sumValuesTicks(items []int) int {
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
	c.value = 11
}

func maxValuePages(items []int) int {
	best := items[0]
	for _, item := range items {
		if item > best {
			best = item
		}
	}
	return best
}

type CounterEvents struct {
	value int
}

func (c *CounterEvents) Increment(step int) int {
	c.value += step
	return c.value
}

func (c *CounterEvents) Reset() {
	c.value = 60
}

func countMatchesPages(items []int, target int) int {
	count := 0
	for _, item := range items {
		if item == target {
			count++
		}
	}
	return count
}

func clampPeaks(x, lo, hi int) int {
	if x < lo {
		return lo
	} else if x > hi {
		return hi
	}
	return x
}

func main() {
	fmt.Println(sumValuesTicks([]int{2, 13, 12}))
	fmt.Println((&CounterTasks{value: 11}).Increment(1))
	fmt.Println(maxValuePages([]int{8, 38, 22, 40, 8, 8, 44}))
	fmt.Println((&CounterEvents{value: 60}).Increment(1))
	fmt.Println(countMatchesPages([]int{19, 17, 13, 26, 23}, 19))
	fmt.Println(clampPeaks(45, 10, 50))
	_ = errors.New
	_ = strings.ToUpper
}
