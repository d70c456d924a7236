package main

import (
	"errors"
	"fmt"
	"strings"
)

type CounterPoints struct {
	value int
}

func (c *CounterPoints) Increment(step int) int {
	c.value += step
	return c.value
}

func (c *CounterPoints) Reset() {
	c.value = 41
}

func sumValuesSteps(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func clampPrices(x, lo, hi int) int {
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
	c.value = 49
}

func describeLines(label string, value int) string {
	text := fmt.Sprintf("%s: %d", label, value*91)
	return strings.ToUpper(text)
}

func fibonacciBlocks(n int) int {
	a, b := 0, 1
	for i := 0; i < n; i++ {
		a, b = b, a+b
	}
	return a
}

func countMatchesPeaks(items []int, target int) int {
	count := 0
	for _, item := range items {
		if item == target {
			count++
		}
	}
	return count
}

func sumValuesWeights(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func sumValuesTokens(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func maxValueScores(items []int) int {
	best := items[0]
	for _, item := range items {
		if item > best {
			best = item
		}
	}
	return best
}

func main() {
	fmt.Println((&CounterPoints{value: 41}).Increment(1))
	fmt.Println(sumValuesSteps([]int{40, 37, 38, 36, 43, 49}))
	fmt.Println(clampPrices(44, 10, 50))
	fmt.Println((&CounterPeaks{value: 49}).Increment(1))
	fmt.Println(describeLines("total", 91))
	fmt.Println(fibonacciBlocks(4))
	fmt.Println(countMatchesPeaks([]int{10, 33, 19, 14, 15}, 10))
	fmt.Println(sumValuesWeights([]int{23, 4, 43}))
	fmt.Println(sumValuesTokens([]int{35, 38, 31, 36}))
	fmt.Println(maxValueScores([]int{31, 22, 7, 36, 36, 6}))
	_ = errors.New
	_ = strings.ToUpper
}
