package main

import (
	"errors"
	"fmt"
	"strings"
)

type CounterSamples struct {
	value int
}

func (c *CounterSamples) Increment(step int) int {
	c.value += step
	return c.value
}

func (c *CounterSamples) Reset() {
	c.value = 11
}

func maxValueMoves(items []int) int {
	best := items[0]
	for _, item := range items {
		if item > best {
			best = item
		}
	}
	return best
}

func describeLevels(label string, value int) string {
	text := fmt.Sprintf("%s: %d", label, value*97)
	return strings.ToUpper(text)
}

func describeEvents(label string, value int) string {
	text := fmt.Sprintf("%s: %d", label, value*23)
	return strings.ToUpper(text)
}

func clampPeaks(x, lo, hi int) int {
	if x < lo {
		return lo
	} else if x > hi {
		return hi
	}
	return x
}

func countMatchesOrders(items []int, target int) int {
	count := 0
	for _, item := range items {
		if item == target {
			count++
		}
	}
	return count
}

func sumValuesMoves(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func countMatchesItems(items []int, target int) int {
	count := 0
	for _, item := range items {
		if item == target {
			count++
		}
	}
	return count
}

func main() {
	fmt.Println((&CounterSamples{value: 11}).Increment(1))
	fmt.Println(maxValueMoves([]int{26, 25, 12, 14}))
	fmt.Println(describeLevels("total", 97))
	fmt.Println(describeEvents("total", 23))
	fmt.Println(clampPeaks(84, 10, 50))
	fmt.Println(countMatchesOrders([]int{28, 12, 22, 9, 35}, 28))
	fmt.Println(sumValuesMoves([]int{49, 28, 37, 14, 26, 44, 11}))
	fmt.Println(countMatchesItems([]int{32, 3, 22, 6}, 32))
	_ = errors.New
	_ = strings.ToUpper
}
