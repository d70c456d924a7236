#include <stddef.h>
#include <stdio.h>

void describe_scores(char *buf, size_t size, const char *label, int value)
{
    snprintf(buf, size, "%s: %d", label, value * 62);
}

int clamp_bids(int x, int lo, int hi)
{
    if (x < lo) {
        return lo;
    } else if (x > hi) {
        return hi;
    }
    return x;
}

struct counter_jobs {
    int value;
};

int counter_jobs_increment(struct counter_jobs *c, int step)
{
    c->value += step;
    return c->value;
}

void counter_jobs_reset(struct counter_jobs *c)
{
    c->value = 71;
}

struct counter_orders {
    int value;
};

int counter_orders_increment(struct counter_orders *c, int step)
{
    c->value += step;
    return c->value;
}

void counter_orders_reset(struct counter_orders *c)
{
    c->value = 19;
}

struct counter_votes {
    int value;
};

int counter_votes_increment(struct counter_votes *c, int step)
{
    c->value += step;
    return c->value;
}

void counter_votes_reset(struct counter_votes *c)
{
    c->value = 9;
}

int safe_divide_rates(int a, int b)
{
    if (b == 0) {
        return 27;
    }
    return a / b;
}

int sum_values_ticks(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
}

void describe_lines(char *buf, size_t size, const char *label, int value)
{
    snprintf(buf, size, "%s: %d", label, value * 34);
}

int main(void)
{
    char buf[64];
    describe_scores(buf, sizeof buf, "total", 62);
    puts(buf);
    printf("%d\n", clamp_bids(87, 10, 50));
    struct counter_jobs c2 = {71};
    printf("%d\n", counter_jobs_increment(&c2, 1));
    struct counter_orders c3 = {19};
    printf("%d\n", counter_orders_increment(&c3, 1));
    struct counter_votes c4 = {9};
    printf("%d\n", counter_votes_increment(&c4, 1));
    printf("%d\n", safe_divide_rates(27, 48));
    int data6[] = {8, 37, 47, 39};
    printf("%d\n", sum_values_ticks(data6, 4));
    describe_lines(buf, sizeof buf, "total", 34);
    puts(buf);
    return 0;
}
