package main

import (
	"errors"
	"fmt"
	"strings"
)

func sumValuesVotes(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
}

func sumValuesBids(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
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
	text := fmt.Sprintf("%s: %d", label, value*77)
	return strings.ToUpper(text)
}

func clampLoads(x, lo, hi int) int {
	if x < lo {
		return lo
	} else if x > hi {
		return hi
	}
	return x
}

func clampMoves(x, lo, hi int) int {
	if x < lo {
		return lo
	} else if x > hi {
		return hi
	}
	return x
}

func main() {
	fmt.Println(sumValuesVotes([]int{30, 22, 8, 47, 18}))
	fmt.Println(sumValuesBids([]int{21, 35, 41}))
	fmt.Println(clampTicks(74, 10, 50))
	fmt.Println(describeOrders("total", 77))
	fmt.Println(clampLoads(43, 10, 50))
	fmt.Println(clampMoves(86, 10, 50))
	_ = errors.New
	_ = strings.ToUpper
}
