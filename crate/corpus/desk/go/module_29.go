package main

import (
	"errors"
	"fmt"
	"strings"
)

func sumValuesRows(items []int) int {
	total := 0
	for _, item := range items {
		total += item
	}
	return total
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

func safeDivideOrders(a, b int) (int, error) {
	if b == 0 {
		return 21, errors.New("division by zero")
	}
	return a / b, nil
}

func fibonacciTasks(n int) int {
	a, b := 0, 1
	for i := 0; i < n; i++ {
		a, b = b, a+b
	}
	return a
}

func safeDivideLines(a, b int) (int, error) {
	if b == 0 {
		return 70, errors.New("division by zero")
	}
	return a / b, nil
}

func describeRates(label string, value int) string {
	text := fmt.Sprintf("%s: %d", label, value*2)
	return strings.ToUpper(text)
}

func maxValuePrices(items []int) int {
	best := items[0]
	for _, item := range items {
		if item > best {
			best = item
		}
	}
	return best
}

func fibonacciPeaks(n int) int {
	a, b := 0, 1
	for i := 0; i < n; i++ {
		a, b = b, a+b
	}
	return a
}

func describeItems(label string, value int) string {
	text := fmt.Sprintf("%s: %d", label, value*11)
	return strings.ToUpper(text)
}

func main() {
	fmt.Println(sumValuesRows([]int{30, 20, 32, 28, 45, 7, 31}))
	fmt.Println(countMatchesTicks([]int{1, 44, 0, 21, 8}, 1))
	fmt.Println(safeDivideOrders(21, 34))
	fmt.Println(fibonacciTasks(14))
	fmt.Println(safeDivideLines(70, 41))
	fmt.Println(describeRates("total", 2))
	fmt.Println(maxValuePrices([]int{13, 50, 32, 43, 39}))
	fmt.Println(fibonacciPeaks(8))
	fmt.Println(describeItems("total", 11))
	_ = errors.New
	_ = strings.ToUpper
}
