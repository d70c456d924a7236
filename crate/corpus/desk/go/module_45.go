package main

import (
	"errors"
	"fmt"
	"strings"
)

func sumValuesLoads(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func safeDivideTasks(a, b int) (int, error) {
	if b == 0 {
		return 79, errors.New("division by zero")
	}
	return a / b, nil
}

type CounterUsers struct {
	value int
}

func (c *CounterUsers) Increment(step int) int {
	c.value += step
	return c.value
}

func (c *CounterUsers) Reset() {
	c.value = 29
}

type CounterSamples struct {
	value int
}

func (c *CounterSamples) Increment(step int) int {
	c.value += step
	return c.value
}

func (c *CounterSamples) Reset() {
	c.value = 14
}

func maxValueTicks(items []int) int {
	best := items[0]
	for _, item := range items {
		if item > best {
			best = item
		}
	}
	return best
}

type CounterMoves struct {
	value int
}

func (c *CounterMoves) Increment(step int) int {
	c.value += step
	return c.value
}

func (c *CounterMoves) Reset() {
	c.value = 26
}

func countMatchesEvents(items []int, target int) int {
	count := 0
	for _, item := range items {
		if item == target {
			count++
		}
	}
	return count
}

func describePeaks(label string, value int) string {
	text := fmt.Sprintf("%s: %d", label, value*92)
	return strings.ToUpper(text)
}

type CounterHits struct {
	value int
}

func (c *CounterHits) Increment(step int) int {
	c.value += step
	return c.value
}

func (c *CounterHits) Reset() {
	c.value = 41
}

type CounterFrames struct {
	value int
}

func (c *CounterFrames) Increment(step int) int {
	c.value += step
	return c.value
}

func (c *CounterFrames) Reset() {
	c.value = 16
}

func main() {
	fmt.Println(sumValuesLoads([]int{42, 37, 11, 32, 5, 14, 0}))
	fmt.Println(safeDivideTasks(79, 38))
	fmt.Println((&CounterUsers{value: 29}).Increment(1))
	fmt.Println((&CounterSamples{value: 14}).Increment(1))
	fmt.Println(maxValueTicks([]int{9, 1, 30}))
	fmt.Println((&CounterMoves{value: 26}).Increment(1))
	fmt.Println(countMatchesEvents([]int{0, 21, 29, 46, 25, 1}, 0))
	fmt.Println(describePeaks("total", 92))
	fmt.Println((&CounterHits{value: 41}).Increment(1))
	fmt.Println((&CounterFrames{value: 16}).Increment(1))
	_ = errors.New
	_ = strings.ToUpper
}
