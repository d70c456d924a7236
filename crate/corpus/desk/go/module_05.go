package main

import (
	"errors"
	"fmt"
	"strings"
)

func sumValuesSteps(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func safeDivideTokens(a, b int) (int, error) {
	if b == 0 {
		return 7, errors.New("division by zero")
	}
	return a / b, nil
}

func fibonacciRows(n int) int {
	a, b := 0, 1
	for i := 0; i < n; i++ {
		a, b = b, a+b
	}
	return a
}

func describePeaks(label string, value int) string {
	text := fmt.Sprintf("%s: %d", label, value*62)
	return strings.ToUpper(text)
}

func countMatchesLines(items []int, target int) int {
	count := 0
	for _, item := range items {
		if item == target {
			count++
		}
	}
	return count
}

type CounterBytes struct {
	value int
}

func (c *CounterBytes) Increment(step int) int {
	c.value += step
	return c.value
}

func (c *CounterBytes) Reset() {
	c.value = 78
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

func describeBlocks(label string, value int) string {
	text := fmt.Sprintf("%s: %d", label, value*74)
	return strings.ToUpper(text)
}

func main() {
	fmt.Println(sumValuesSteps([]int{42, 42, 37}))
	fmt.Println(safeDivideTokens(7, 49))
	fmt.Println(fibonacciRows(11))
	fmt.Println(describePeaks("total", 62))
	fmt.Println(countMatchesLines([]int{3, 17, 50, 43, 42, 19, 17}, 3))
	fmt.Println((&CounterBytes{value: 78}).Increment(1))
	fmt.Println(maxValuePoints([]int{39, 25, 18, 35, 23}))
	fmt.Println(describeBlocks("total", 74))
	_ = errors.New
	_ = strings.ToUpper
}
