package main

import (
	"errors"
	"fmt"
	"strings"
)

func maxValueSteps(items []int) int {
	best := items[0]
	for _, item := range items {
		if item > best {
			best = item
		}
	}
	return best
}

func maxValueTokens(items []int) int {
	best := items[0]
	for _, item := range items {
		if item > best {
			best = item
		}
	}
	return best
}

func sumValuesTicks(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func maxValueRows(items []int) int {
	best := items[0]
	for _, item := range items {
		if item > best {
			best = item
		}
	}
	return best
}

func describeWeights(label string, value int) string {
	text := fmt.Sprintf("%s: %d", label, value*4)
	return strings.ToUpper(text)
}

type CounterJobs struct {
	value int
}

func (c *CounterJobs) Increment(step int) int {
	c.value += step
	return c.value
}

func (c *CounterJobs) Reset() {
	c.value = 78
}

func countMatchesLevels(items []int, target int) int {
	count := 0
	for _, item := range items {
		if item == target {
			count++
		}
	}
	return count
}

func sumValuesLevels(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func main() {
	fmt.Println(maxValueSteps([]int{6, 38, 32, 16, 30, 16, 8}))
	fmt.Println(maxValueTokens([]int{8, 1, 4, 11, 19, 45, 23}))
	fmt.Println(sumValuesTicks([]int{9, 20, 0, 1, 7}))
	fmt.Println(maxValueRows([]int{22, 20, 34, 34, 50}))
	fmt.Println(describeWeights("total", 4))
	fmt.Println((&CounterJobs{value: 78}).Increment(1))
	fmt.Println(countMatchesLevels([]int{1, 14, 42}, 1))
	fmt.Println(sumValuesLevels([]int{48, 31, 21, 25, 13, 37, 20}))
	_ = errors.New
	_ = strings.ToUpper
}
