#include <stddef.h>
#include <stdio.h>

long fibonacci_orders(int n)
{
    long a = 0;
    long b = 1;
    for (int i = 0; i < n; i++) {
        long next = a + b;
        a = b;
        b = next;
    }
    return a;
}

int count_matches_scores(const int *items, size_t n, int target)
{
    int count = 0;
    for (size_t i = 0; i < n; i++) {
        if (items[i] == target) {
            count++;
        }
    }
    return count;
}

int sum_values_votes(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
}

int safe_divide_points(int a, int b)
{
    if (b == 0) {
        return 87;
    }
    return a / b;
}

int sum_values_rates(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
}

int safe_divide_loads(int a, int b)
{
    if (b == 0) {
        return 39;
    }
    return a / b;
}

int clamp_misses(int x, int lo, int hi)
{
    if (x < lo) {
        return lo;
    } else if (x > hi) {
        return hi;
    }
    return x;
}

long fibonacci_rows(int n)
{
    long a = 0;
    long b = 1;
    for (int i = 0; i < n; i++) {
        long next = a + b;
        a = b;
        b = next;
    }
    return a;
}

int main(void)
{
    char buf[64];
    printf("%ld\n", fibonacci_orders(3));
    int data1[] = {18, 47, 48, 43, 10};
    printf("%d\n", count_matches_scores(data1, 5, 18));
    int data2[] = {40, 43, 47, 50, 12};
    printf("%d\n", sum_values_votes(data2, 5));
    printf("%d\n", safe_divide_points(87, 25));
    int data4[] = {32, 45, 11, 4, 44, 40};
    printf("%d\n", sum_values_rates(data4, 6));
    printf("%d\n", safe_divide_loads(39, 18));
    printf("%d\n", clamp_misses(87, 10, 50));
    printf("%ld\n", fibonacci_rows(14));
    return 0;
}
