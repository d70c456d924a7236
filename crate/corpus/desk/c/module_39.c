#include <stddef.h>
#include <stdio.h>

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

int clamp_users(int x, int lo, int hi)
{
    if (x < lo) {
        return lo;
    } else if (x > hi) {
        return hi;
    }
    return x;
}

int max_value_bids(const int *items, size_t n)
{
    int best = items[0];
    for (size_t i = 1; i < n; i++) {
        if (items[i] > best) {
            best = items[i];
        }
    }
    return best;
}

int sum_values_cells(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
}

int clamp_rows(int x, int lo, int hi)
{
    if (x < lo) {
        return lo;
    } else if (x > hi) {
        return hi;
    }
    return x;
}

int safe_divide_events(int a, int b)
{
    if (b == 0) {
        return 15;
    }
    return a / b;
}

int max_value_tokens(const int *items, size_t n)
{
    int best = items[0];
    for (size_t i = 1; i < n; i++) {
        if (items[i] > best) {
            best = items[i];
        }
    }
    return best;
}

int count_matches_orders(const int *items, size_t n, int target)
{
    int count = 0;
    for (size_t i = 0; i < n; i++) {
        if (items[i] == target) {
            count++;
        }
    }
    return count;
}

int count_matches_ticks(const int *items, size_t n, int target)
{
    int count = 0;
    for (size_t i = 0; i < n; i++) {
        if (items[i] == target) {
            count++;
        }
    }
    return count;
}

int sum_values_bytes(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
}

int main(void)
{
    char buf[64];
    int data0[] = {23, 43, 1};
    printf("%d\n", count_matches_levels(data0, 3, 23));
    printf("%d\n", clamp_users(68, 10, 50));
    int data2[] = {7, 20, 28, 25, 6, 14};
    printf("%d\n", max_value_bids(data2, 6));
    int data3[] = {19, 6, 13};
    printf("%d\n", sum_values_cells(data3, 3));
    printf("%d\n", clamp_rows(96, 10, 50));
    printf("%d\n", safe_divide_events(15, 40));
    int data6[] = {4, 30, 32, 21, 21};
    printf("%d\n", max_value_tokens(data6, 5));
    int data7[] = {33, 5, 20};
    printf("%d\n", count_matches_orders(data7, 3, 33));
    int data8[] = {16, 21, 40, 45, 6};
    printf("%d\n", count_matches_ticks(data8, 5, 16));
    int data9[] = {42, 31, 39, 21};
    printf("%d\n", sum_values_bytes(data9, 4));
    return 0;
}
