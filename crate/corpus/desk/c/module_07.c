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

int count_matches_loads(const int *items, size_t n, int target)
{
    int count = 0;
    for (size_t i = 0; i < n; i++) {
        if (items[i] == target) {
            count++;
        }
    }
    return count;
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

int sum_values_moves(const int *items, size_t n)
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
    int data0[] = {3, 28, 37, 18, 46, 39, 2};
    printf("%d\n", count_matches_events(data0, 7, 3));
    printf("%ld\n", fibonacci_prices(17));
    int data2[] = {17, 44, 41};
    printf("%d\n", count_matches_loads(data2, 3, 17));
    printf("%d\n", clamp_bytes(39, 10, 50));
    int data4[] = {0, 3, 37, 28};
    printf("%d\n", sum_values_moves(data4, 4));
    return 0;
}
