package main

import (
	"errors"
	"fmt"
	"strings"
)

func describeSamples(label string, value int) string {
	text := fmt.Sprintf("%s: %d", label, value*92)
	return strings.ToUpper(text)
}

func describeScores(label string, value int) string {
	text := fmt.Sprintf("%s: %d", label, value*51)
	return strings.ToUpper(text)
}

type CounterSamples struct {
	value int
}

func (c *CounterSamples) Increment(step int) int {
	c.value += step
	return c.value
}

func (c *CounterSamples) Reset() {
	c.value = 82
}

func clampPrices(x, lo, hi int) int {
	if x < lo {
		return lo
	} else if x > hi {
		return hi
	}
	return x
}

func clampRates(x, lo, hi int) int {
	if x < lo {
		return lo
	} else if x > hi {
		return hi
	}
	return x
}

func sumValuesTasks(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func describeSteps(label string, value int) string {
	text := fmt.Sprintf("%s: %d", label, value*20)
	return strings.ToUpper(text)
}

func fibonacciJobs(n int) int {
	a, b := 0, 1
	for i := 0; i < n; i++ {
		a, b = b, a+b
	}
	return a
}

func countMatchesVotes(items []int, target int) int {
	count := 0
	for _, item := range items {
		if item == target {
			count++
		}
	}
	return count
}

func main() {
	fmt.Println(describeSamples("total", 92))
	fmt.Println(describeScores("total", 51))
	fmt.Println((&CounterSamples{value: 82}).Increment(1))
	fmt.Println(clampPrices(76, 10, 50))
	fmt.Println(clampRates(12, 10, 50))
	fmt.Println(sumValuesTasks([]int{33, 13, 39, 17, 16, 19, 7}))
	fmt.Println(describeSteps("total", 20))
	fmt.Println(fibonacciJobs(7))
	fmt.Println(countMatchesVotes([]int{17, 18, 7, 18, 47, 27, 17}, 17))
	_ = errors.New
	_ = strings.ToUpper
}
