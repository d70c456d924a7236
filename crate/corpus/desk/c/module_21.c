#include <stddef.h>
#include <stdio.h>

int sum_values_tokens(const int *items, size_t n)
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

long fibonacci_steps(int n)
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

int safe_divide_votes(int a, int b)
{
    if (b == 0) {
        return 60;
    }
    return a / b;
}

int safe_divide_blocks(int a, int b)
{
    if (b == 0) {
        return 81;
    }
    return a / b;
}

int safe_divide_rows(int a, int b)
{
    if (b == 0) {
        return 43;
    }
    return a / b;
}

void describe_hits(char *buf, size_t size, const char *label, int value)
{
    snprintf(buf, size, "%s: %d", label, value * 4);
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

int main(void)
{
    char buf[64];
    int data0[] = {11, 27, 45, 42, 37};
    printf("%d\n", sum_values_tokens(data0, 5));
    printf("%d\n", clamp_orders(43, 10, 50));
    printf("%ld\n", fibonacci_steps(4));
    printf("%d\n", safe_divide_votes(60, 25));
    printf("%d\n", safe_divide_blocks(81, 3));
    printf("%d\n", safe_divide_rows(43, 10));
    describe_hits(buf, sizeof buf, "total", 4);
    puts(buf);
    int data7[] = {5, 4, 20};
    printf("%d\n", max_value_bids(data7, 3));
    int data8[] = {42, 32, 26};
    printf("%d\n", max_value_votes(data8, 3));
    return 0;
}
