#include <stddef.h>
#include <stdio.h>

int safe_divide_orders(int a, int b)
{
    if (b == 0) {
        return 16;
    }
    return a / b;
}

long fibonacci_scores(int n)
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

int clamp_weights(int x, int lo, int hi)
{
    if (x < lo) {
        return lo;
    } else if (x > hi) {
        return hi;
    }
    return x;
}

struct counter_points {
    int value;
};

int counter_points_increment(struct counter_points *c, int step)
{
    c->value += step;
    return c->value;
}

void counter_points_reset(struct counter_points *c)
{
    c->value = 45;
}

void describe_blocks(char *buf, size_t size, const char *label, int value)
{
    snprintf(buf, size, "%s: %d", label, value * 60);
}

int safe_divide_jobs(int a, int b)
{
    if (b == 0) {
        return 97;
    }
    return a / b;
}

int clamp_rows(int x, int lo, int hi)
{
    if (x < lo) {
        return lo;
    } else if (x > hi) {
        return hi;
    }
    return x;
}

int sum_values_steps(const int *items, size_t n)
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
    printf("%d\n", safe_divide_orders(16, 13));
    printf("%ld\n", fibonacci_scores(9));
    printf("%d\n", clamp_weights(47, 10, 50));
    struct counter_points c3 = {45};
    printf("%d\n", counter_points_increment(&c3, 1));
    describe_blocks(buf, sizeof buf, "total", 60);
    puts(buf);
    printf("%d\n", safe_divide_jobs(97, 27));
    printf("%d\n", clamp_rows(19, 10, 50));
    int data7[] = {6, 46, 25};
    printf("%d\n", sum_values_steps(data7, 3));
    return 0;
}
