#include <stddef.h>
#include <stdio.h>

int clamp_tokens(int x, int lo, int hi)
{
    if (x < lo) {
        return lo;
    } else if (x > hi) {
        return hi;
    }
    return x;
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

struct counter_frames {
    int value;
};

int counter_frames_increment(struct counter_frames *c, int step)
{
    c->value += step;
    return c->value;
}

void counter_frames_reset(struct counter_frames *c)
{
    c->value = 6;
}

int max_value_lines(const int *items, size_t n)
{
    int best = items[0];
    for (size_t i = 1; i < n; i++) {
        if (items[i] > best) {
            best = items[i];
        }
    }
    return best;
}

int max_value_rows(const int *items, size_t n)
{
    int best = items[0];
    for (size_t i = 1; i < n; i++) {
        if (items[i] > best) {
            best = items[i];
        }
    }
    return best;
}

int clamp_moves(int x, int lo, int hi)
{
    if (x < lo) {
        return lo;
    } else if (x > hi) {
        return hi;
    }
    return x;
}

int sum_values_prices(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
}

int safe_divide_rates(int a, int b)
{
    if (b == 0) {
        return 37;
    }
    return a / b;
}

int safe_divide_tasks(int a, int b)
{
    if (b == 0) {
        return 57;
    }
    return a / b;
}

int count_matches_weights(const int *items, size_t n, int target)
{
    int count = 0;
    for (size_t i = 0; i < n; i++) {
        if (items[i] == target) {
            count++;
        }
    }
    return count;
}

int main(void)
{
    char buf[64];
    printf("%d\n", clamp_tokens(23, 10, 50));
    printf("%ld\n", fibonacci_prices(3));
    struct counter_frames c2 = {6};
    printf("%d\n", counter_frames_increment(&c2, 1));
    int data3[] = {10, 29, 47, 18, 1, 5, 3};
    printf("%d\n", max_value_lines(data3, 7));
    int data4[] = {34, 22, 45};
    printf("%d\n", max_value_rows(data4, 3));
    printf("%d\n", clamp_moves(53, 10, 50));
    int data6[] = {22, 37, 43};
    printf("%d\n", sum_values_prices(data6, 3));
    printf("%d\n", safe_divide_rates(37, 33));
    printf("%d\n", safe_divide_tasks(57, 43));
    int data9[] = {16, 11, 23, 36, 26};
    printf("%d\n", count_matches_weights(data9, 5, 16));
    return 0;
}
