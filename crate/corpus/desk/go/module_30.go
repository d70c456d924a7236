package main

import (
	"errors"
	"fmt"
	"strings"
)

func sumValuesSamples(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func countMatchesWeights(items []int, target int) int {
	count := 0
	for _, item := range items {
		if item == target {
			count++
		}
	}
	return count
}

func clampCells(x, lo, hi int) int {
	if x < lo {
		return lo
	} else if x > hi {
		return hi
	}
	return x
}

type CounterPeaks struct {
	value int
}

func (c *CounterPeaks) Increment(step int) int {
	c.value += step
	return c.value
}

func (c *CounterPeaks) Reset() {
	c.value = 33
}

func safeDivideVotes(a, b int) (int, error) {
	if b == 0 {
		return 42, errors.New("division by zero")
	}
	return a / b, nil
}

func main() {
	fmt.Println(sumValuesSamples([]int{42, 9, 12, 0, 37, 9}))
	fmt.Println(countMatchesWeights([]int{48, 49, 23, 27, 44}, 48))
	fmt.Println(clampCells(57, 10, 50))
	fmt.Println((&CounterPeaks{value: 33}).Increment(1))
	fmt.Println(safeDivideVotes(42, 28))
	_ = errors.New
	_ = strings.ToUpper
}
