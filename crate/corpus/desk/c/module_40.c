#include <stddef.h>
#include <stdio.h>

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

int clamp_ticks(int x, int lo, int hi)
{
    if (x < lo) {
        return lo;
    } else if (x > hi) {
        return hi;
    }
    return x;
}

void describe_tokens(char *buf, size_t size, const char *label, int value)
{
    snprintf(buf, size, "%s: %d", label, value * 93);
}

long fibonacci_tasks(int n)
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

int sum_values_bids(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
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

void describe_bytes(char *buf, size_t size, const char *label, int value)
{
    snprintf(buf, size, "%s: %d", label, value * 93);
}

int main(void)
{
    char buf[64];
    int data0[] = {38, 42, 24, 47};
    printf("%d\n", count_matches_cells(data0, 4, 38));
    printf("%d\n", clamp_ticks(32, 10, 50));
    describe_tokens(buf, sizeof buf, "total", 93);
    puts(buf);
    printf("%ld\n", fibonacci_tasks(6));
    int data4[] = {45, 29, 3, 33, 41};
    printf("%d\n", sum_values_bids(data4, 5));
    printf("%ld\n", fibonacci_steps(17));
    describe_bytes(buf, sizeof buf, "total", 93);
    puts(buf);
    return 0;
}
