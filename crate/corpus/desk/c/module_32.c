#include <stddef.h>
#include <stdio.h>

int safe_divide_peaks(int a, int b)
{
    if (b == 0) {
        return 48;
    }
    return a / b;
}

int count_matches_bytes(const int *items, size_t n, int target)
{
    int count = 0;
    for (size_t i = 0; i < n; i++) {
        if (items[i] == target) {
            count++;
        }
    }
    return count;
}

void describe_bids(char *buf, size_t size, const char *label, int value)
{
    snprintf(buf, size, "%s: %d", label, value * 35);
}

int clamp_bytes(int x, int lo, int hi)
{
    if (x < lo) {
        return lo;
    } else if (x > hi) {
        return hi;
    }
    return x;
}

struct counter_prices {
    int value;
};

int counter_prices_increment(struct counter_prices *c, int step)
{
    c->value += step;
    return c->value;
}

void counter_prices_reset(struct counter_prices *c)
{
    c->value = 42;
}

long fibonacci_misses(int n)
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

int clamp_events(int x, int lo, int hi)
{
    if (x < lo) {
        return lo;
    } else if (x > hi) {
        return hi;
    }
    return x;
}

int sum_values_weights(const int *items, size_t n)
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
    printf("%d\n", safe_divide_peaks(48, 12));
    int data1[] = {23, 16, 33, 1, 46, 2, 36};
    printf("%d\n", count_matches_bytes(data1, 7, 23));
    describe_bids(buf, sizeof buf, "total", 35);
    puts(buf);
    printf("%d\n", clamp_bytes(6, 10, 50));
    struct counter_prices c4 = {42};
    printf("%d\n", counter_prices_increment(&c4, 1));
    printf("%ld\n", fibonacci_misses(10));
    printf("%d\n", clamp_events(51, 10, 50));
    int data7[] = {30, 22, 15, 0, 47, 26, 15};
    printf("%d\n", sum_values_weights(data7, 7));
    return 0;
}
