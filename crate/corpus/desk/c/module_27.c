#include <stddef.h>
#include <stdio.h>

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

int max_value_prices(const int *items, size_t n)
{
    int best = items[0];
    for (size_t i = 1; i < n; i++) {
        if (items[i] > best) {
            best = items[i];
        }
    }
    return best;
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
    c->value = 63;
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

int sum_values_pages(const int *items, size_t n)
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
    int data0[] = {40, 33, 49, 2, 32, 32};
    printf("%d\n", max_value_peaks(data0, 6));
    int data1[] = {37, 50, 42, 16, 23, 47, 17};
    printf("%d\n", max_value_prices(data1, 7));
    struct counter_peaks c2 = {63};
    printf("%d\n", counter_peaks_increment(&c2, 1));
    printf("%d\n", clamp_users(14, 10, 50));
    int data4[] = {25, 31, 12, 26, 29};
    printf("%d\n", sum_values_pages(data4, 5));
    return 0;
}
