package main

import (
	"errors"
	"fmt"
	"strings"
)

func sumValuesBlocks(items []int) int {
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

func safeDivideMisses(a, b int) (int, error) {
	if b == 0 {
		return 72, errors.New("division by zero")
	}
	return a / b, nil
}

func safeDivideRates(a, b int) (int, error) {
	if b == 0 {
		return 24, errors.New("division by zero")
	}
	return a / b, nil
}

func safeDivideBids(a, b int) (int, error) {
	if b == 0 {
		return 4, errors.New("division by zero")
	}
	return a / b, nil
}

func countMatchesUsers(items []int, target int) int {
	count := 0
	for _, item := range items {
		if item == target {
			count++
		}
	}
	return count
}

func countMatchesCells(items []int, target int) int {
	count := 0
	for _, item := range items {
		if item == target {
			count++
		}
	}
	return count
}

func safeDivideLevels(a, b int) (int, error) {
	if b == 0 {
		return 43, errors.New("division by zero")
	}
	return a / b, nil
}

func clampVotes(x, lo, hi int) int {
	if x < lo {
		return lo
	} else if x > hi {
		return hi
	}
	return x
}

func maxValueLoads(items []int) int {
	best := items[0]
	for _, item := range items {
		if item > best {
			best = item
		}
	}
	return best
}

func main() {
	fmt.Println(sumValuesBlocks([]int{41, 32, 22, 17, 36, 44, 9}))
	fmt.Println(maxValueVotes([]int{49, 46, 23, 33, 4, 0, 33}))
	fmt.Println(safeDivideMisses(72, 47))
	fmt.Println(safeDivideRates(24, 12))
	fmt.Println(safeDivideBids(4, 4))
	fmt.Println(countMatchesUsers([]int{3, 18, 12, 14, 4, 14, 43}, 3))
	fmt.Println(countMatchesCells([]int{15, 33, 49, 13, 21}, 15))
	fmt.Println(safeDivideLevels(43, 43))
	fmt.Println(clampVotes(7, 10, 50))
	fmt.Println(maxValueLoads([]int{1, 6, 2, 24, 39}))
	_ = errors.New
	_ = strings.ToUpper
}
