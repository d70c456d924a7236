#include <stddef.h>
#include <stdio.h>

void describe_levels(char *buf, size_t size, const char *label, int value)
{
    snprintf(buf, size, "%s: %d", label, value * 72);
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
    c->value = 44;
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
    c->value = 88;
}

int sum_values_pages(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
}

int clamp_users(int x, int lo, int hi)
{
    if (x < lo) {
        return lo;
    } else if (x > hi) {
        return hi;
    }
    return x;
}

int count_matches_loads(const int *items, size_t n, int target)
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
    describe_levels(buf, sizeof buf, "total", 72);
    puts(buf);
    struct counter_peaks c1 = {44};
    printf("%d\n", counter_peaks_increment(&c1, 1));
    struct counter_bytes c2 = {88};
    printf("%d\n", counter_bytes_increment(&c2, 1));
    int data3[] = {12, 14, 41, 43};
    printf("%d\n", sum_values_pages(data3, 4));
    printf("%d\n", clamp_users(33, 10, 50));
    int data5[] = {22, 41, 35, 33};
    printf("%d\n", count_matches_loads(data5, 4, 22));
    return 0;
}
