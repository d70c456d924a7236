#include <stddef.h>
#include <stdio.h>

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
    c->value = 11;
}

int max_value_moves(const int *items, size_t n)
{
    int best = items[0];
    for (size_t i = 1; i < n; i++) {
        if (items[i] > best) {
            best = items[i];
        }
    }
    return best;
}

void describe_levels(char *buf, size_t size, const char *label, int value)
{
    snprintf(buf, size, "%s: %d", label, value * 97);
}

void describe_events(char *buf, size_t size, const char *label, int value)
{
    snprintf(buf, size, "%s: %d", label, value * 23);
}

int clamp_peaks(int x, int lo, int hi)
{
    if (x < lo) {
        return lo;
    } else if (x > hi) {
        return hi;
    }
    return x;
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

int sum_values_moves(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
}

int count_matches_items(const int *items, size_t n, int target)
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
    struct counter_samples c0 = {11};
    printf("%d\n", counter_samples_increment(&c0, 1));
    int data1[] = {26, 25, 12, 14};
    printf("%d\n", max_value_moves(data1, 4));
    describe_levels(buf, sizeof buf, "total", 97);
    puts(buf);
    describe_events(buf, sizeof buf, "total", 23);
    puts(buf);
    printf("%d\n", clamp_peaks(84, 10, 50));
    int data5[] = {28, 12, 22, 9, 35};
    printf("%d\n", count_matches_orders(data5, 5, 28));
    int data6[] = {49, 28, 37, 14, 26, 44, 11};
    printf("%d\n", sum_values_moves(data6, 7));
    int data7[] = {32, 3, 22, 6};
    printf("%d\n", count_matches_items(data7, 4, 32));
    return 0;
}
