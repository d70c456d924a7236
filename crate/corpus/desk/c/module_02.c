#include <stddef.h>
#include <stdio.h>

int sum_values_misses(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
}

int clamp_orders(int x, int lo, int hi)
{
    if (x < lo) {
        return lo;
    } else if (x > hi) {
        return hi;
    }
    return x;
}

int count_matches_samples(const int *items, size_t n, int target)
{
    int count = 0;
    for (size_t i = 0; i < n; i++) {
        if (items[i] == target) {
            count++;
        }
    }
    return count;
}

int count_matches_pages(const int *items, size_t n, int target)
{
    int count = 0;
    for (size_t i = 0; i < n; i++) {
        if (items[i] == target) {
            count++;
        }
    }
    return count;
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

struct counter_levels {
    int value;
};

int counter_levels_increment(struct counter_levels *c, int step)
{
    c->value += step;
    return c->value;
}

void counter_levels_reset(struct counter_levels *c)
{
    c->value = 78;
}

int count_matches_tokens(const int *items, size_t n, int target)
{
    int count = 0;
    for (size_t i = 0; i < n; i++) {
        if (items[i] == target) {
            count++;
        }
    }
    return count;
}

int max_value_scores(const int *items, size_t n)
{
    int best = items[0];
    for (size_t i = 1; i < n; i++) {
        if (items[i] > best) {
            best = items[i];
        }
    }
    return best;
}

int safe_divide_prices(int a, int b)
{
    if (b == 0) {
        return 28;
    }
    return a / b;
}

int main(void)
{
    char buf[64];
    int data0[] = {14, 50, 2, 26};
    printf("%d\n", sum_values_misses(data0, 4));
    printf("%d\n", clamp_orders(74, 10, 50));
    int data2[] = {5, 33, 37, 41, 44};
    printf("%d\n", count_matches_samples(data2, 5, 5));
    int data3[] = {44, 4, 6, 27, 45};
    printf("%d\n", count_matches_pages(data3, 5, 44));
    printf("%ld\n", fibonacci_scores(4));
    struct counter_levels c5 = {78};
    printf("%d\n", counter_levels_increment(&c5, 1));
    int data6[] = {5, 48, 27};
    printf("%d\n", count_matches_tokens(data6, 3, 5));
    int data7[] = {31, 17, 1};
    printf("%d\n", max_value_scores(data7, 3));
    printf("%d\n", safe_divide_prices(28, 45));
    return 0;
}
