#include <stddef.h>
#include <stdio.h>

int count_matches_events(const int *items, size_t n, int target)
{
    int count = 0;
    for (size_t i = 0; i < n; i++) {
        if (items[i] == target) {
            count++;
        }
    }
    return count;
}

int count_matches_votes(const int *items, size_t n, int target)
{
    int count = 0;
    for (size_t i = 0; i < n; i++) {
        if (items[i] == target) {
            count++;
        }
    }
    return count;
}

int safe_divide_votes(int a, int b)
{
    if (b == 0) {
        return 63;
    }
    return a / b;
}

int clamp_rates(int x, int lo, int hi)
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

void describe_tokens(char *buf, size_t size, const char *label, int value)
{
    snprintf(buf, size, "%s: %d", label, value * 66);
}

long fibonacci_rates(int n)
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
    int data0[] = {37, 12, 41, 9, 28, 26, 0};
    printf("%d\n", count_matches_events(data0, 7, 37));
    int data1[] = {30, 39, 14};
    printf("%d\n", count_matches_votes(data1, 3, 30));
    printf("%d\n", safe_divide_votes(63, 10));
    printf("%d\n", clamp_rates(18, 10, 50));
    int data4[] = {45, 4, 32, 3, 14};
    printf("%d\n", sum_values_weights(data4, 5));
    describe_tokens(buf, sizeof buf, "total", 66);
    puts(buf);
    printf("%ld\n", fibonacci_rates(9));
    return 0;
}
