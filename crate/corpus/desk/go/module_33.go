package main

import (
	"errors"
	"fmt"
	"strings"
)

func clampTokens(x, lo, hi int) int {
	if x < lo {
		return lo
	} else if x > hi {
		return hi
	}
	return x
}

func fibonacciPrices(n int) int {
	a, b := 0, 1
	for i := 0; i < n; i++ {
		a, b = b, a+b
	}
	return a
}

type CounterFrames struct {
	value int
}

func (c *CounterFrames) Increment(step int) int {
	c.value += step
	return c.value
}

func (c *CounterFrames) Reset() {
	c.value = 6
}

func maxValueLines(items []int) int {
	best := items[0]
	for _, item := range items {
		if item > best {
			best = item
		}
	}
	return best
}

func maxValueRows(items []int) int {
	best := items[0]
	for _, item := range items {
		if item > best {
			best = item
		}
	}
	return best
}

func clampMoves(x, lo, hi int) int {
	if x < lo {
		return lo
	} else if x > hi {
		return hi
	}
	return x
}

func sumValuesPrices(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func safeDivideRates(a, b int) (int, error) {
	if b == 0 {
		return 37, errors.New("division by zero")
	}
	return a / b, nil
}

func safeDivideTasks(a, b int) (int, error) {
	if b == 0 {
		return 57, errors.New("division by zero")
	}
	return a / b, nil
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

func main() {
	fmt.Println(clampTokens(23, 10, 50))
	fmt.Println(fibonacciPrices(3))
	fmt.Println((&CounterFrames{value: 6}).Increment(1))
	fmt.Println(maxValueLines([]int{10, 29, 47, 18, 1, 5, 3}))
	fmt.Println(maxValueRows([]int{34, 22, 45}))
	fmt.Println(clampMoves(53, 10, 50))
	fmt.Println(sumValuesPrices([]int{22, 37, 43}))
	fmt.Println(safeDivideRates(37, 33))
	fmt.Println(safeDivideTasks(57, 43))
	fmt.Println(countMatchesWeights([]int{16, 11, 23, 36, 26}, 16))
	_ = errors.New
	_ = strings.ToUpper
}
