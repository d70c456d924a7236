#include <stddef.h>
#include <stdio.h>

int sum_values_ticks(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
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
    c->value = 11;
}

int max_value_pages(const int *items, size_t n)
{
    int best = items[0];
    for (size_t i = 1; i < n; i++) {
        if (items[i] > best) {
            best = items[i];
        }
    }
    return best;
}

struct counter_events {
    int value;
};

int counter_events_increment(struct counter_events *c, int step)
{
    c->value += step;
    return c->value;
}

void counter_events_reset(struct counter_events *c)
{
    c->value = 60;
}

int count_matches_pages(const int *items, size_t n, int target)
{
    int count = 0;
    for (size_t i = 0; i < n; i++) {
        if (items[i] == target) {
            count++;
        }
    }
    return count;
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

int main(void)
{
    char buf[64];
    int data0[] = {2, 13, 12};
    printf("%d\n", sum_values_ticks(data0, 3));
    struct counter_tasks c1 = {11};
    printf("%d\n", counter_tasks_increment(&c1, 1));
    int data2[] = {8, 38, 22, 40, 8, 8, 44};
    printf("%d\n", max_value_pages(data2, 7));
    struct counter_events c3 = {60};
    printf("%d\n", counter_events_increment(&c3, 1));
    int data4[] = {19, 17, 13, 26, 23};
    printf("%d\n", count_matches_pages(data4, 5, 19));
    printf("%d\n", clamp_peaks(45, 10, 50));
    return 0;
}
