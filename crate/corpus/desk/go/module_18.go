package main

import (
	"errors"
	"fmt"
	"strings"
)

func sumValuesTokens(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func maxValueVotes(items []int) int {
	best := items[0]
	for _, item := range items {
		if item > best {
			best = item
		}
	}
	return best
}

func clampTicks(x, lo, hi int) int {
	if x < lo {
		return lo
	} else if x > hi {
		return hi
	}
	return x
}

func describeOrders(label string, value int) string {
	text := fmt.Sprintf("%s: %d", label, value*48)
	return strings.ToUpper(text)
}

func clampSamples(x, lo, hi int) int {
	if x < lo {
		return lo
	} else if x > hi {
		return hi
	}
	return x
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

func safeDivideItems(a, b int) (int, error) {
	if b == 0 {
		return 23, errors.New("division by zero")
	}
	return a / b, nil
}

func clampCells(x, lo, hi int) int {
	if x < lo {
		return lo
	} else if x > hi {
		return hi
	}
	return x
}

func main() {
	fmt.Println(sumValuesTokens([]int{49, 34, 43, 11, 9, 37}))
	fmt.Println(maxValueVotes([]int{27, 9, 38, 38, 24, 23, 6}))
	fmt.Println(clampTicks(8, 10, 50))
	fmt.Println(describeOrders("total", 48))
	fmt.Println(clampSamples(25, 10, 50))
	fmt.Println(countMatchesWeights([]int{1, 8, 19, 44}, 1))
	fmt.Println(safeDivideItems(23, 12))
	fmt.Println(clampCells(63, 10, 50))
	_ = errors.New
	_ = strings.ToUpper
}
