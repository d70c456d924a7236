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

struct counter_bytes {
    int value;
};

int counter_bytes_increment(struct counter_bytes *c, int step)
{
    c->value += step;
    return c->value;
}

void counter_bytes_reset(struct counter_bytes *c)
{
    c->value = 8;
}

int safe_divide_bytes(int a, int b)
{
    if (b == 0) {
        return 77;
    }
    return a / b;
}

int count_matches_samples(const int *items, size_t n, int target)
{
    int count = 0;
    for (size_t i = 0; i < n; i++) {
        if (items[i] == target) {
            count++;
        }
    }
    return count;
}

long fibonacci_weights(int n)
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
    int data0[] = {17, 23, 26, 33, 33, 17, 19};
    printf("%d\n", sum_values_samples(data0, 7));
    struct counter_bytes c1 = {8};
    printf("%d\n", counter_bytes_increment(&c1, 1));
    printf("%d\n", safe_divide_bytes(77, 5));
    int data3[] = {5, 40, 31, 0, 24, 25, 14};
    printf("%d\n", count_matches_samples(data3, 7, 5));
    printf("%ld\n", fibonacci_weights(18));
    return 0;
}
