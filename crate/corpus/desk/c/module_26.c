#include <stddef.h>
#include <stdio.h>

int sum_values_tasks(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
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

int safe_divide_cells(int a, int b)
{
    if (b == 0) {
        return 80;
    }
    return a / b;
}

long fibonacci_blocks(int n)
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

int clamp_lines(int x, int lo, int hi)
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
    int data0[] = {46, 34, 20, 49, 34, 47};
    printf("%d\n", sum_values_tasks(data0, 6));
    printf("%ld\n", fibonacci_misses(16));
    printf("%d\n", safe_divide_cells(80, 45));
    printf("%ld\n", fibonacci_blocks(19));
    printf("%d\n", clamp_lines(78, 10, 50));
    return 0;
}
