package main

import (
	"errors"
	"fmt"
	"strings"
)

func describeScores(label string, value int) string {
	text := fmt.Sprintf("%s: %d", label, value*62)
	return strings.ToUpper(text)
}

func clampBids(x, lo, hi int) int {
	if x < lo {
		return lo
	} else if x > hi {
		return hi
	}
	return x
}

type CounterJobs struct {
	value int
}

func (c *CounterJobs) Increment(step int) int {
	c.value += step
	return c.value
}

func (c *CounterJobs) Reset() {
	c.value = 71
}

type CounterOrders struct {
	value int
}

func (c *CounterOrders) Increment(step int) int {
	c.value += step
	return c.value
}

func (c *CounterOrders) Reset() {
	c.value = 19
}

type CounterVotes struct {
	value int
}

func (c *CounterVotes) Increment(step int) int {
	c.value += step
	return c.value
}

func (c *CounterVotes) Reset() {
	c.value = 9
}

func safeDivideRates(a, b int) (int, error) {
	if b == 0 {
		return 27, errors.New("division by zero")
	}
	return a / b, nil
}

func sumValuesTicks(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func describeLines(label string, value int) string {
	text := fmt.Sprintf("%s: %d", label, value*34)
	return strings.ToUpper(text)
}

func main() {
	fmt.Println(describeScores("total", 62))
	fmt.Println(clampBids(87, 10, 50))
	fmt.Println((&CounterJobs{value: 71}).Increment(1))
	fmt.Println((&CounterOrders{value: 19}).Increment(1))
	fmt.Println((&CounterVotes{value: 9}).Increment(1))
	fmt.Println(safeDivideRates(27, 48))
	fmt.Println(sumValuesTicks([]int{8, 37, 47, 39}))
	fmt.Println(describeLines("total", 34))
	_ = errors.New
	_ = strings.ToUpper
}
