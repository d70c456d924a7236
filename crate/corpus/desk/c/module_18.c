#include <stddef.h>
#include <stdio.h>

int sum_values_tokens(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
}

int max_value_votes(const int *items, size_t n)
{
    int best = items[0];
    for (size_t i = 1; i < n; i++) {
        if (items[i] > best) {
            best = items[i];
        }
    }
    return best;
}

int clamp_ticks(int x, int lo, int hi)
{
    if (x < lo) {
        return lo;
    } else if (x > hi) {
        return hi;
    }
    return x;
}

void describe_orders(char *buf, size_t size, const char *label, int value)
{
    snprintf(buf, size, "%s: %d", label, value * 48);
}

int clamp_samples(int x, int lo, int hi)
{
    if (x < lo) {
        return lo;
    } else if (x > hi) {
        return hi;
    }
    return x;
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

int safe_divide_items(int a, int b)
{
    if (b == 0) {
        return 23;
    }
    return a / b;
}

int clamp_cells(int x, int lo, int hi)
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
    int data0[] = {49, 34, 43, 11, 9, 37};
    printf("%d\n", sum_values_tokens(data0, 6));
    int data1[] = {27, 9, 38, 38, 24, 23, 6};
    printf("%d\n", max_value_votes(data1, 7));
    printf("%d\n", clamp_ticks(8, 10, 50));
    describe_orders(buf, sizeof buf, "total", 48);
    puts(buf);
    printf("%d\n", clamp_samples(25, 10, 50));
    int data5[] = {1, 8, 19, 44};
    printf("%d\n", count_matches_weights(data5, 4, 1));
    printf("%d\n", safe_divide_items(23, 12));
    printf("%d\n", clamp_cells(63, 10, 50));
    return 0;
}
