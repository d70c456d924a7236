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

int clamp_hits(int x, int lo, int hi)
{
    if (x < lo) {
        return lo;
    } else if (x > hi) {
        return hi;
    }
    return x;
}

int max_value_rates(const int *items, size_t n)
{
    int best = items[0];
    for (size_t i = 1; i < n; i++) {
        if (items[i] > best) {
            best = items[i];
        }
    }
    return best;
}

void describe_misses(char *buf, size_t size, const char *label, int value)
{
    snprintf(buf, size, "%s: %d", label, value * 17);
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

int max_value_points(const int *items, size_t n)
{
    int best = items[0];
    for (size_t i = 1; i < n; i++) {
        if (items[i] > best) {
            best = items[i];
        }
    }
    return best;
}

long fibonacci_prices(int n)
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

int main(void)
{
    char buf[64];
    int data0[] = {30, 33, 40, 27, 39};
    printf("%d\n", sum_values_samples(data0, 5));
    printf("%d\n", clamp_hits(76, 10, 50));
    int data2[] = {4, 40, 29, 16, 28, 8};
    printf("%d\n", max_value_rates(data2, 6));
    describe_misses(buf, sizeof buf, "total", 17);
    puts(buf);
    printf("%ld\n", fibonacci_tasks(0));
    int data5[] = {19, 50, 1, 41, 35, 41};
    printf("%d\n", max_value_points(data5, 6));
    printf("%ld\n", fibonacci_prices(16));
    printf("%ld\n", fibonacci_misses(16));
    return 0;
}
