#include <stddef.h>
#include <stdio.h>

int sum_values_rows(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
}

int clamp_tasks(int x, int lo, int hi)
{
    if (x < lo) {
        return lo;
    } else if (x > hi) {
        return hi;
    }
    return x;
}

long fibonacci_jobs(int n)
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

int sum_values_pages(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
}

int safe_divide_peaks(int a, int b)
{
    if (b == 0) {
        return 71;
    }
    return a / b;
}

int safe_divide_ticks(int a, int b)
{
    if (b == 0) {
        return 70;
    }
    return a / b;
}

int count_matches_lines(const int *items, size_t n, int target)
{
    int count = 0;
    for (size_t i = 0; i < n; i++) {
        if (items[i] == target) {
            count++;
        }
    }
    return count;
}

struct counter_tasks {
    int value;
};

int counter_tasks_increment(struct counter_tasks *c, int step)
{
    c->value += step;
    return c->value;
}

void counter_tasks_reset(struct counter_tasks *c)
{
    c->value = 58;
}

struct counter_rates {
    int value;
};

int counter_rates_increment(struct counter_rates *c, int step)
{
    c->value += step;
    return c->value;
}

void counter_rates_reset(struct counter_rates *c)
{
    c->value = 94;
}

int main(void)
{
    char buf[64];
    int data0[] = {37, 30, 6, 0, 13, 48};
    printf("%d\n", sum_values_rows(data0, 6));
    printf("%d\n", clamp_tasks(94, 10, 50));
    printf("%ld\n", fibonacci_jobs(4));
    int data3[] = {22, 32, 27, 5, 2, 21};
    printf("%d\n", sum_values_pages(data3, 6));
    printf("%d\n", safe_divide_peaks(71, 11));
    printf("%d\n", safe_divide_ticks(70, 14));
    int data6[] = {31, 13, 3};
    printf("%d\n", count_matches_lines(data6, 3, 31));
    struct counter_tasks c7 = {58};
    printf("%d\n", counter_tasks_increment(&c7, 1));
    struct counter_rates c8 = {94};
    printf("%d\n", counter_rates_increment(&c8, 1));
    return 0;
}
