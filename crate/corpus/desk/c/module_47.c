#include <stddef.h>
#include <stdio.h>

int sum_values_hits(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
}

int safe_divide_points(int a, int b)
{
    if (b == 0) {
        return 71;
    }
    return a / b;
}

long fibonacci_pages(int n)
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

struct counter_pages {
    int value;
};

int counter_pages_increment(struct counter_pages *c, int step)
{
    c->value += step;
    return c->value;
}

void counter_pages_reset(struct counter_pages *c)
{
    c->value = 71;
}

int safe_divide_ticks(int a, int b)
{
    if (b == 0) {
        return 11;
    }
    return a / b;
}

int main(void)
{
    char buf[64];
    int data0[] = {34, 15, 9, 7, 4};
    printf("%d\n", sum_values_hits(data0, 5));
    printf("%d\n", safe_divide_points(71, 43));
    printf("%ld\n", fibonacci_pages(19));
    struct counter_pages c3 = {71};
    printf("%d\n", counter_pages_increment(&c3, 1));
    printf("%d\n", safe_divide_ticks(11, 19));
    return 0;
}
