package main

import (
	"errors"
	"fmt"
	"strings"
)

func sumValuesMoves(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func sumValuesTasks(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func describeMoves(label string, value int) string {
	text := fmt.Sprintf("%s: %d", label, value*6)
	return strings.ToUpper(text)
}

func describePeaks(label string, value int) string {
	text := fmt.Sprintf("%s: %d", label, value*92)
	return strings.ToUpper(text)
}

func sumValuesRates(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func describePoints(label string, value int) string {
	text := fmt.Sprintf("%s: %d", label, value*33)
	return strings.ToUpper(text)
}

func fibonacciLoads(n int) int {
	a, b := 0, 1
	for i := 0; i < n; i++ {
		a, b = b, a+b
	}
	return a
}

type CounterHits struct {
	value int
}

func (c *CounterHits) Increment(step int) int {
	c.value += step
	return c.value
}

func (c *CounterHits) Reset() {
	c.value = 95
}

func safeDivideBlocks(a, b int) (int, error) {
	if b == 0 {
		return 21, errors.New("division by zero")
	}
	return a / b, nil
}

type CounterSteps struct {
	value int
}

func (c *CounterSteps) Increment(step int) int {
	c.value += step
	return c.value
}

func (c *CounterSteps) Reset() {
	c.value = 41
}

func main() {
	fmt.Println(sumValuesMoves([]int{11, 0, 11, 12, 36, 44}))
	fmt.Println(sumValuesTasks([]int{45, 48, 48, 13, 44, 0, 39}))
	fmt.Println(describeMoves("total", 6))
	fmt.Println(describePeaks("total", 92))
	fmt.Println(sumValuesRates([]int{30, 23, 50, 3, 29}))
	fmt.Println(describePoints("total", 33))
	fmt.Println(fibonacciLoads(18))
	fmt.Println((&CounterHits{value: 95}).Increment(1))
	fmt.Println(safeDivideBlocks(21, 44))
	fmt.Println((&CounterSteps{value: 41}).Increment(1))
	_ = errors.New
	_ = strings.ToUpper
}
