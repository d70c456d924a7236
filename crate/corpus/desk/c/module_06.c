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

int clamp_lines(int x, int lo, int hi)
{
    if (x < lo) {
        return lo;
    } else if (x > hi) {
        return hi;
    }
    return x;
}

struct counter_samples {
    int value;
};

int counter_samples_increment(struct counter_samples *c, int step)
{
    c->value += step;
    return c->value;
}

void counter_samples_reset(struct counter_samples *c)
{
    c->value = 96;
}

int sum_values_cells(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
}

int clamp_tokens(int x, int lo, int hi)
{
    if (x < lo) {
        return lo;
    } else if (x > hi) {
        return hi;
    }
    return x;
}

void describe_samples(char *buf, size_t size, const char *label, int value)
{
    snprintf(buf, size, "%s: %d", label, value * 54);
}

int sum_values_users(const int *items, size_t n)
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
    int data0[] = {48, 19, 40, 9, 37, 4, 25};
    printf("%d\n", sum_values_samples(data0, 7));
    printf("%d\n", clamp_lines(5, 10, 50));
    struct counter_samples c2 = {96};
    printf("%d\n", counter_samples_increment(&c2, 1));
    int data3[] = {39, 24, 0};
    printf("%d\n", sum_values_cells(data3, 3));
    printf("%d\n", clamp_tokens(59, 10, 50));
    describe_samples(buf, sizeof buf, "total", 54);
    puts(buf);
    int data6[] = {6, 12, 37, 4, 33, 24};
    printf("%d\n", sum_values_users(data6, 6));
    return 0;
}
