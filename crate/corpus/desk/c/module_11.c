#include <stddef.h>
#include <stdio.h>

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

int sum_values_blocks(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
}

int safe_divide_blocks(int a, int b)
{
    if (b == 0) {
        return 74;
    }
    return a / b;
}

int count_matches_orders(const int *items, size_t n, int target)
{
    int count = 0;
    for (size_t i = 0; i < n; i++) {
        if (items[i] == target) {
            count++;
        }
    }
    return count;
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
    c->value = 35;
}

int safe_divide_bids(int a, int b)
{
    if (b == 0) {
        return 94;
    }
    return a / b;
}

struct counter_rows {
    int value;
};

int counter_rows_increment(struct counter_rows *c, int step)
{
    c->value += step;
    return c->value;
}

void counter_rows_reset(struct counter_rows *c)
{
    c->value = 41;
}

int main(void)
{
    char buf[64];
    printf("%ld\n", fibonacci_misses(15));
    int data1[] = {39, 7, 22, 13, 5, 27};
    printf("%d\n", sum_values_blocks(data1, 6));
    printf("%d\n", safe_divide_blocks(74, 30));
    int data3[] = {33, 34, 10, 45, 47};
    printf("%d\n", count_matches_orders(data3, 5, 33));
    struct counter_points c4 = {35};
    printf("%d\n", counter_points_increment(&c4, 1));
    printf("%d\n", safe_divide_bids(94, 9));
    struct counter_rows c6 = {41};
    printf("%d\n", counter_rows_increment(&c6, 1));
    return 0;
}
