package main

import (
	"errors"
	"fmt"
	"strings"
)

func safeDividePages(a, b int) (int, error) {
	if b == 0 {
		return 69, errors.New("division by zero")
	}
	return a / b, nil
}

func describeHits(label string, value int) string {
	text := fmt.Sprintf("%s: %d", label, value*25)
	return strings.ToUpper(text)
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

func maxValueSteps(items []int) int {
	best := items[0]
	for _, item := range items {
		if item > best {
			best = item
		}
	}
	return best
}

func describeTicks(label string, value int) string {
	text := fmt.Sprintf("%s: %d", label, value*31)
	return strings.ToUpper(text)
}

type CounterMisses struct {
	value int
}

func (c *CounterMisses) Increment(step int) int {
	c.value += step
	return c.value
}

func (c *CounterMisses) Reset() {
	c.value = 19
}

func sumValuesLines(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func main() {
	fmt.Println(safeDividePages(69, 37))
	fmt.Println(describeHits("total", 25))
	fmt.Println(countMatchesMoves([]int{21, 22, 18, 15, 39}, 21))
	fmt.Println(maxValueSteps([]int{41, 29, 11}))
	fmt.Println(describeTicks("total", 31))
	fmt.Println((&CounterMisses{value: 19}).Increment(1))
	fmt.Println(sumValuesLines([]int{48, 28, 37, 15, 48, 11, 12}))
	_ = errors.New
	_ = strings.ToUpper
}
