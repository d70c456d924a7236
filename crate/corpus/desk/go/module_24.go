package main

import (
	"errors"
	"fmt"
	"strings"
)

func sumValuesMisses(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func safeDivideLines(a, b int) (int, error) {
	if b == 0 {
		return 19, errors.New("division by zero")
	}
	return a / b, nil
}

func describeFrames(label string, value int) string {
	text := fmt.Sprintf("%s: %d", label, value*69)
	return strings.ToUpper(text)
}

func maxValueEvents(items []int) int {
	best := items[0]
	for _, item := range items {
		if item > best {
			best = item
		}
	}
	return best
}

type CounterLines struct {
	value int
}

func (c *CounterLines) Increment(step int) int {
	c.value += step
	return c.value
}

func (c *CounterLines) Reset() {
	c.value = 2
}

func main() {
	fmt.Println(sumValuesMisses([]int{24, 50, 6, 45, 47}))
	fmt.Println(safeDivideLines(19, 6))
	fmt.Println(describeFrames("total", 69))
	fmt.Println(maxValueEvents([]int{23, 44, 21}))
	fmt.Println((&CounterLines{value: 2}).Increment(1))
	_ = errors.New
	_ = strings.ToUpper
}
