package main

import (
	"errors"
	"fmt"
	"strings"
)

type CounterJobs struct {
	value int
}

func (c *CounterJobs) Increment(step int) int {
	c.value += step
	return c.value
}

func (c *CounterJobs) Reset() {
	c.value = 43
}

func describeTicks(label string, value int) string {
	text := fmt.Sprintf("%s: %d", label, value*20)
	return strings.ToUpper(text)
}

func maxValuePoints(items []int) int {
	best := items[0]
	for _, item := range items {
		if item > best {
			best = item
		}
	}
	return best
}

func maxValuePeaks(items []int) int {
	best := items[0]
	for _, item := range items {
		if item > best {
			best = item
		}
	}
	return best
}

func sumValuesCells(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func countMatchesTasks(items []int, target int) int {
	count := 0
	for _, item := range items {
		if item == target {
			count++
		}
	}
	return count
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

func describeHits(label string, value int) string {
	text := fmt.Sprintf("%s: %d", label, value*37)
	return strings.ToUpper(text)
}

func sumValuesPages(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func main() {
	fmt.Println((&CounterJobs{value: 43}).Increment(1))
	fmt.Println(describeTicks("total", 20))
	fmt.Println(maxValuePoints([]int{50, 14, 23, 15}))
	fmt.Println(maxValuePeaks([]int{28, 46, 28}))
	fmt.Println(sumValuesCells([]int{28, 23, 29, 49}))
	fmt.Println(countMatchesTasks([]int{42, 23, 36, 22, 26, 48}, 42))
	fmt.Println(maxValueSteps([]int{32, 15, 31, 9, 19, 3, 14}))
	fmt.Println(describeHits("total", 37))
	fmt.Println(sumValuesPages([]int{41, 2, 44, 46, 7, 6, 35}))
	_ = errors.New
	_ = strings.ToUpper
}
