package main

import (
	"errors"
	"fmt"
	"strings"
)

func maxValueMisses(items []int) int {
	best := items[0]
	for _, item := range items {
		if item > best {
			best = item
		}
	}
	return best
}

func clampLevels(x, lo, hi int) int {
	if x < lo {
		return lo
	} else if x > hi {
		return hi
	}
	return x
}

func clampCells(x, lo, hi int) int {
	if x < lo {
		return lo
	} else if x > hi {
		return hi
	}
	return x
}

func describeFrames(label string, value int) string {
	text := fmt.Sprintf("%s: %d", label, value*8)
	return strings.ToUpper(text)
}

func sumValuesVotes(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func countMatchesHits(items []int, target int) int {
	count := 0
	for _, item := range items {
		if item == target {
			count++
		}
	}
	return count
}

func describeHits(label string, value int) string {
	text := fmt.Sprintf("%s: %d", label, value*24)
	return strings.ToUpper(text)
}

func maxValueJobs(items []int) int {
	best := items[0]
	for _, item := range items {
		if item > best {
			best = item
		}
	}
	return best
}

func main() {
	fmt.Println(maxValueMisses([]int{9, 45, 1}))
	fmt.Println(clampLevels(21, 10, 50))
	fmt.Println(clampCells(5, 10, 50))
	fmt.Println(describeFrames("total", 8))
	fmt.Println(sumValuesVotes([]int{3, 45, 11, 42, 31, 27}))
	fmt.Println(countMatchesHits([]int{28, 10, 15, 29, 8, 11}, 28))
	fmt.Println(describeHits("total", 24))
	fmt.Println(maxValueJobs([]int{1, 38, 20, 9, 19, 28, 41}))
	_ = errors.New
	_ = strings.ToUpper
}
