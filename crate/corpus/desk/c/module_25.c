#include <stddef.h>
#include <stdio.h>

int sum_values_votes(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
}

int sum_values_bids(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
}

int clamp_ticks(int x, int lo, int hi)
{
    if (x < lo) {
        return lo;
    } else if (x > hi) {
        return hi;
    }
    return x;
}

void describe_orders(char *buf, size_t size, const char *label, int value)
{
    snprintf(buf, size, "%s: %d", label, value * 77);
}

int clamp_loads(int x, int lo, int hi)
{
    if (x < lo) {
        return lo;
    } else if (x > hi) {
        return hi;
    }
    return x;
}

int clamp_moves(int x, int lo, int hi)
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
    int data0[] = {30, 22, 8, 47, 18};
    printf("%d\n", sum_values_votes(data0, 5));
    int data1[] = {21, 35, 41};
    printf("%d\n", sum_values_bids(data1, 3));
    printf("%d\n", clamp_ticks(74, 10, 50));
    describe_orders(buf, sizeof buf, "total", 77);
    puts(buf);
    printf("%d\n", clamp_loads(43, 10, 50));
    printf("%d\n", clamp_moves(86, 10, 50));
    return 0;
}
