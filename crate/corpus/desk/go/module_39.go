package main

import (
	"errors"
	"fmt"
	"strings"
)

func countMatchesLevels(items []int, target int) int {
	count := 0
	for _, item := range items {
		if item == target {
			count++
		}
	}
	return count
}

func clampUsers(x, lo, hi int) int {
	if x < lo {
		return lo
	} else if x > hi {
		return hi
	}
	return x
}

func maxValueBids(items []int) int {
	best := items[0]
	for _, item := range items {
		if item > best {
			best = item
		}
	}
	return best
}

func sumValuesCells(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func clampRows(x, lo, hi int) int {
	if x < lo {
		return lo
	} else if x > hi {
		return hi
	}
	return x
}

func safeDivideEvents(a, b int) (int, error) {
	if b == 0 {
		return 15, errors.New("division by zero")
	}
	return a / b, nil
}

func maxValueTokens(items []int) int {
	best := items[0]
	for _, item := range items {
		if item > best {
			best = item
		}
	}
	return best
}

func countMatchesOrders(items []int, target int) int {
	count := 0
	for _, item := range items {
		if item == target {
			count++
		}
	}
	return count
}

func countMatchesTicks(items []int, target int) int {
	count := 0
	for _, item := range items {
		if item == target {
			count++
		}
	}
	return count
}

func sumValuesBytes(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func main() {
	fmt.Println(countMatchesLevels([]int{23, 43, 1}, 23))
	fmt.Println(clampUsers(68, 10, 50))
	fmt.Println(maxValueBids([]int{7, 20, 28, 25, 6, 14}))
	fmt.Println(sumValuesCells([]int{19, 6, 13}))
	fmt.Println(clampRows(96, 10, 50))
	fmt.Println(safeDivideEvents(15, 40))
	fmt.Println(maxValueTokens([]int{4, 30, 32, 21, 21}))
	fmt.Println(countMatchesOrders([]int{33, 5, 20}, 33))
	fmt.Println(countMatchesTicks([]int{16, 21, 40, 45, 6}, 16))
	fmt.Println(sumValuesBytes([]int{42, 31, 39, 21}))
	_ = errors.New
	_ = strings.ToUpper
}
