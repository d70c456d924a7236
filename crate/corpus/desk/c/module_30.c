#include <stddef.h>
#include <stdio.h>

int sum_values_samples(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
}

int count_matches_weights(const int *items, size_t n, int target)
{
    int count = 0;
    for (size_t i = 0; i < n; i++) {
        if (items[i] == target) {
            count++;
        }
    }
    return count;
}

int clamp_cells(int x, int lo, int hi)
{
    if (x < lo) {
        return lo;
    } else if (x > hi) {
        return hi;
    }
    return x;
}

struct counter_peaks {
    int value;
};

int counter_peaks_increment(struct counter_peaks *c, int step)
{
    c->value += step;
    return c->value;
}

void counter_peaks_reset(struct counter_peaks *c)
{
    c->value = 33;
}

int safe_divide_votes(int a, int b)
{
    if (b == 0) {
        return 42;
    }
    return a / b;
}

int main(void)
{
    char buf[64];
    int data0[] = {42, 9, 12, 0, 37, 9};
    printf("%d\n", sum_values_samples(data0, 6));
    int data1[] = {48, 49, 23, 27, 44};
    printf("%d\n", count_matches_weights(data1, 5, 48));
    printf("%d\n", clamp_cells(57, 10, 50));
    struct counter_peaks c3 = {33};
    printf("%d\n", counter_peaks_increment(&c3, 1));
    printf("%d\n", safe_divide_votes(42, 28));
    return 0;
}
