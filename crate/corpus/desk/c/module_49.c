#include <stddef.h>
#include <stdio.h>

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
    c->value = 41;
}

int sum_values_steps(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
}

int clamp_prices(int x, int lo, int hi)
{
    if (x < lo) {
        return lo;
    } else if (x > hi) {
        return hi;
    }
    return x;
}

struct counter_peaks {
    int value;
};

int counter_peaks_increment(struct counter_peaks *c, int step)
{
    c->value += step;
    return c->value;
}

void counter_peaks_reset(struct counter_peaks *c)
{
    c->value = 49;
}

void describe_lines(char *buf, size_t size, const char *label, int value)
{
    snprintf(buf, size, "%s: %d", label, value * 91);
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

int count_matches_peaks(const int *items, size_t n, int target)
{
    int count = 0;
    for (size_t i = 0; i < n; i++) {
        if (items[i] == target) {
            count++;
        }
    }
    return count;
}

int sum_values_weights(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
}

int sum_values_tokens(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
}

int max_value_scores(const int *items, size_t n)
{
    int best = items[0];
    for (size_t i = 1; i < n; i++) {
        if (items[i] > best) {
            best = items[i];
        }
    }
    return best;
}

int main(void)
{
    char buf[64];
    struct counter_points c0 = {41};
    printf("%d\n", counter_points_increment(&c0, 1));
    int data1[] = {40, 37, 38, 36, 43, 49};
    printf("%d\n", sum_values_steps(data1, 6));
    printf("%d\n", clamp_prices(44, 10, 50));
    struct counter_peaks c3 = {49};
    printf("%d\n", counter_peaks_increment(&c3, 1));
    describe_lines(buf, sizeof buf, "total", 91);
    puts(buf);
    printf("%ld\n", fibonacci_blocks(4));
    int data6[] = {10, 33, 19, 14, 15};
    printf("%d\n", count_matches_peaks(data6, 5, 10));
    int data7[] = {23, 4, 43};
    printf("%d\n", sum_values_weights(data7, 3));
    int data8[] = {35, 38, 31, 36};
    printf("%d\n", sum_values_tokens(data8, 4));
    int data9[] = {31, 22, 7, 36, 36, 6};
    printf("%d\n", max_value_scores(data9, 6));
    return 0;
}
