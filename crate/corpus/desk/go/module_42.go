package main

import (
	"errors"
	"fmt"
	"strings"
)

func countMatchesVotes(items []int, target int) int {
	count := 0
	for _, item := range items {
		if item == target {
			count++
		}
	}
	return count
}

func describeEvents(label string, value int) string {
	text := fmt.Sprintf("%s: %d", label, value*23)
	return strings.ToUpper(text)
}

func sumValuesBytes(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func describePoints(label string, value int) string {
	text := fmt.Sprintf("%s: %d", label, value*20)
	return strings.ToUpper(text)
}

func fibonacciVotes(n int) int {
	a, b := 0, 1
	for i := 0; i < n; i++ {
		a, b = b, a+b
	}
	return a
}

type CounterBytes struct {
	value int
}

func (c *CounterBytes) Increment(step int) int {
	c.value += step
	return c.value
}

func (c *CounterBytes) Reset() {
	c.value = 5
}

func main() {
	fmt.Println(countMatchesVotes([]int{30, 30, 10, 20}, 30))
	fmt.Println(describeEvents("total", 23))
	fmt.Println(sumValuesBytes([]int{30, 33, 13, 48, 13, 13, 28}))
	fmt.Println(describePoints("total", 20))
	fmt.Println(fibonacciVotes(10))
	fmt.Println((&CounterBytes{value: 5}).Increment(1))
	_ = errors.New
	_ = strings.ToUpper
}
