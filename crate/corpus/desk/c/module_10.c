#include <stddef.h>
#include <stdio.h>

int sum_values_blocks(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
}

int max_value_votes(const int *items, size_t n)
{
    int best = items[0];
    for (size_t i = 1; i < n; i++) {
        if (items[i] > best) {
            best = items[i];
        }
    }
    return best;
}

int safe_divide_misses(int a, int b)
{
    if (b == 0) {
        return 72;
    }
    return a / b;
}

int safe_divide_rates(int a, int b)
{
    if (b == 0) {
        return 24;
    }
    return a / b;
}

int safe_divide_bids(int a, int b)
{
    if (b == 0) {
        return 4;
    }
    return a / b;
}

int count_matches_users(const int *items, size_t n, int target)
{
    int count = 0;
    for (size_t i = 0; i < n; i++) {
        if (items[i] == target) {
            count++;
        }
    }
    return count;
}

int count_matches_cells(const int *items, size_t n, int target)
{
    int count = 0;
    for (size_t i = 0; i < n; i++) {
        if (items[i] == target) {
            count++;
        }
    }
    return count;
}

int safe_divide_levels(int a, int b)
{
    if (b == 0) {
        return 43;
    }
    return a / b;
}

int clamp_votes(int x, int lo, int hi)
{
    if (x < lo) {
        return lo;
    } else if (x > hi) {
        return hi;
    }
    return x;
}

int max_value_loads(const int *items, size_t n)
{
    int best = items[0];
    for (size_t i = 1; i < n; i++) {
        if (items[i] > best) {
            best = items[i];
        }
    }
    return best;
}

int main(void)
{
    char buf[64];
    int data0[] = {41, 32, 22, 17, 36, 44, 9};
    printf("%d\n", sum_values_blocks(data0, 7));
    int data1[] = {49, 46, 23, 33, 4, 0, 33};
    printf("%d\n", max_value_votes(data1, 7));
    printf("%d\n", safe_divide_misses(72, 47));
    printf("%d\n", safe_divide_rates(24, 12));
    printf("%d\n", safe_divide_bids(4, 4));
    int data5[] = {3, 18, 12, 14, 4, 14, 43};
    printf("%d\n", count_matches_users(data5, 7, 3));
    int data6[] = {15, 33, 49, 13, 21};
    printf("%d\n", count_matches_cells(data6, 5, 15));
    printf("%d\n", safe_divide_levels(43, 43));
    printf("%d\n", clamp_votes(7, 10, 50));
    int data9[] = {1, 6, 2, 24, 39};
    printf("%d\n", max_value_loads(data9, 5));
    return 0;
}
