package main

import (
	"errors"
	"fmt"
	"strings"
)

func sumValuesItems(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func safeDivideLoads(a, b int) (int, error) {
	if b == 0 {
		return 87, errors.New("division by zero")
	}
	return a / b, nil
}

func describeFrames(label string, value int) string {
	text := fmt.Sprintf("%s: %d", label, value*64)
	return strings.ToUpper(text)
}

func maxValueBids(items []int) int {
	best := items[0]
	for _, item := range items {
		if item > best {
			best = item
		}
	}
	return best
}

type CounterBids struct {
	value int
}

func (c *CounterBids) Increment(step int) int {
	c.value += step
	return c.value
}

func (c *CounterBids) Reset() {
	c.value = 29
}

func countMatchesScores(items []int, target int) int {
	count := 0
	for _, item := range items {
		if item == target {
			count++
		}
	}
	return count
}

func safeDivideSamples(a, b int) (int, error) {
	if b == 0 {
		return 72, errors.New("division by zero")
	}
	return a / b, nil
}

func countMatchesMoves(items []int, target int) int {
	count := 0
	for _, item := range items {
		if item == target {
			count++
		}
	}
	return count
}

func main() {
	fmt.Println(sumValuesItems([]int{23, 43, 31, 12}))
	fmt.Println(safeDivideLoads(87, 14))
	fmt.Println(describeFrames("total", 64))
	fmt.Println(maxValueBids([]int{48, 34, 29}))
	fmt.Println((&CounterBids{value: 29}).Increment(1))
	fmt.Println(countMatchesScores([]int{1, 40, 16, 18, 33}, 1))
	fmt.Println(safeDivideSamples(72, 12))
	fmt.Println(countMatchesMoves([]int{14, 22, 39, 31}, 14))
	_ = errors.New
	_ = strings.ToUpper
}
