#include <stddef.h>
#include <stdio.h>

long fibonacci_votes(int n)
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

int count_matches_levels(const int *items, size_t n, int target)
{
    int count = 0;
    for (size_t i = 0; i < n; i++) {
        if (items[i] == target) {
            count++;
        }
    }
    return count;
}

int clamp_samples(int x, int lo, int hi)
{
    if (x < lo) {
        return lo;
    } else if (x > hi) {
        return hi;
    }
    return x;
}

int sum_values_points(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
}

int max_value_orders(const int *items, size_t n)
{
    int best = items[0];
    for (size_t i = 1; i < n; i++) {
        if (items[i] > best) {
            best = items[i];
        }
    }
    return best;
}

long fibonacci_prices(int n)
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

int clamp_pages(int x, int lo, int hi)
{
    if (x < lo) {
        return lo;
    } else if (x > hi) {
        return hi;
    }
    return x;
}

int main(void)
{
    char buf[64];
    printf("%ld\n", fibonacci_votes(12));
    int data1[] = {28, 48, 13, 18};
    printf("%d\n", count_matches_levels(data1, 4, 28));
    printf("%d\n", clamp_samples(3, 10, 50));
    int data3[] = {31, 15, 16, 42};
    printf("%d\n", sum_values_points(data3, 4));
    int data4[] = {18, 6, 46, 47, 49, 17, 7};
    printf("%d\n", max_value_orders(data4, 7));
    printf("%ld\n", fibonacci_prices(6));
    printf("%d\n", clamp_pages(72, 10, 50));
    return 0;
}
