#include <stddef.h>
#include <stdio.h>

void describe_samples(char *buf, size_t size, const char *label, int value)
{
    snprintf(buf, size, "%s: %d", label, value * 92);
}

void describe_scores(char *buf, size_t size, const char *label, int value)
{
    snprintf(buf, size, "%s: %d", label, value * 51);
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
    c->value = 82;
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

int clamp_rates(int x, int lo, int hi)
{
    if (x < lo) {
        return lo;
    } else if (x > hi) {
        return hi;
    }
    return x;
}

int sum_values_tasks(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
}

void describe_steps(char *buf, size_t size, const char *label, int value)
{
    snprintf(buf, size, "%s: %d", label, value * 20);
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

int count_matches_votes(const int *items, size_t n, int target)
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
    describe_samples(buf, sizeof buf, "total", 92);
    puts(buf);
    describe_scores(buf, sizeof buf, "total", 51);
    puts(buf);
    struct counter_samples c2 = {82};
    printf("%d\n", counter_samples_increment(&c2, 1));
    printf("%d\n", clamp_prices(76, 10, 50));
    printf("%d\n", clamp_rates(12, 10, 50));
    int data5[] = {33, 13, 39, 17, 16, 19, 7};
    printf("%d\n", sum_values_tasks(data5, 7));
    describe_steps(buf, sizeof buf, "total", 20);
    puts(buf);
    printf("%ld\n", fibonacci_jobs(7));
    int data8[] = {17, 18, 7, 18, 47, 27, 17};
    printf("%d\n", count_matches_votes(data8, 7, 17));
    return 0;
}
