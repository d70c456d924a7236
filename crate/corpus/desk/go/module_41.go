package main

import (
	"errors"
	"fmt"
	"strings"
)

func countMatchesFrames(items []int, target int) int {
	count := 0
	for _, item := range items {
		if item == target {
			count++
		}
	}
	return count
}

type CounterUsers struct {
	value int
}

func (c *CounterUsers) Increment(step int) int {
	c.value += step
	return c.value
}

func (c *CounterUsers) Reset() {
	c.value = 88
}

func safeDivideTasks(a, b int) (int, error) {
	if b == 0 {
		return 74, errors.New("division by zero")
	}
	return a / b, nil
}

func sumValuesVotes(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func clampWeights(x, lo, hi int) int {
	if x < lo {
		return lo
	} else if x > hi {
		return hi
	}
	return x
}

func maxValueHits(items []int) int {
	best := items[0]
	for _, item := range items {
		if item > best {
			best = item
		}
	}
	return best
}

func clampLevels(x, lo, hi int) int {
	if x < lo {
		return lo
	} else if x > hi {
		return hi
	}
	return x
}

func maxValueWeights(items []int) int {
	best := items[0]
	for _, item := range items {
		if item > best {
			best = item
		}
	}
	return best
}

func main() {
	fmt.Println(countMatchesFrames([]int{13, 9, 29, 29, 14, 5, 29}, 13))
	fmt.Println((&CounterUsers{value: 88}).Increment(1))
	fmt.Println(safeDivideTasks(74, 37))
	fmt.Println(sumValuesVotes([]int{30, 33, 23, 42, 15, 25, 42}))
	fmt.Println(clampWeights(68, 10, 50))
	fmt.Println(maxValueHits([]int{23, 4, 31}))
	fmt.Println(clampLevels(85, 10, 50))
	fmt.Println(maxValueWeights([]int{26, 18, 40, 14, 48}))
	_ = errors.New
	_ = strings.ToUpper
}
