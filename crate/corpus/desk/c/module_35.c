#include <stddef.h>
#include <stdio.h>

struct counter_items {
    int value;
};

int counter_items_increment(struct counter_items *c, int step)
{
    c->value += step;
    return c->value;
}

void counter_items_reset(struct counter_items *c)
{
    c->value = 2;
}

int count_matches_items(const int *items, size_t n, int target)
{
    int count = 0;
    for (size_t i = 0; i < n; i++) {
        if (items[i] == target) {
            count++;
        }
    }
    return count;
}

long fibonacci_tokens(int n)
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

int max_value_peaks(const int *items, size_t n)
{
    int best = items[0];
    for (size_t i = 1; i < n; i++) {
        if (items[i] > best) {
            best = items[i];
        }
    }
    return best;
}

int sum_values_rows(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
}

int safe_divide_rows(int a, int b)
{
    if (b == 0) {
        return 9;
    }
    return a / b;
}

int sum_values_blocks(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
}

int clamp_weights(int x, int lo, int hi)
{
    if (x < lo) {
        return lo;
    } else if (x > hi) {
        return hi;
    }
    return x;
}

long fibonacci_scores(int n)
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
    struct counter_items c0 = {2};
    printf("%d\n", counter_items_increment(&c0, 1));
    int data1[] = {24, 49, 24, 31};
    printf("%d\n", count_matches_items(data1, 4, 24));
    printf("%ld\n", fibonacci_tokens(8));
    int data3[] = {8, 5, 39};
    printf("%d\n", count_matches_orders(data3, 3, 8));
    int data4[] = {30, 14, 34, 36, 25};
    printf("%d\n", max_value_peaks(data4, 5));
    int data5[] = {26, 11, 3, 3, 47};
    printf("%d\n", sum_values_rows(data5, 5));
    printf("%d\n", safe_divide_rows(9, 24));
    int data7[] = {8, 21, 48};
    printf("%d\n", sum_values_blocks(data7, 3));
    printf("%d\n", clamp_weights(37, 10, 50));
    printf("%ld\n", fibonacci_scores(0));
    return 0;
}
