#include <stddef.h>
#include <stdio.h>

int count_matches_frames(const int *items, size_t n, int target)
{
    int count = 0;
    for (size_t i = 0; i < n; i++) {
        if (items[i] == target) {
            count++;
        }
    }
    return count;
}

struct counter_users {
    int value;
};

int counter_users_increment(struct counter_users *c, int step)
{
    c->value += step;
    return c->value;
}

void counter_users_reset(struct counter_users *c)
{
    c->value = 88;
}

int safe_divide_tasks(int a, int b)
{
    if (b == 0) {
        return 74;
    }
    return a / b;
}

int sum_values_votes(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
}

int clamp_weights(int x, int lo, int hi)
{
    if (x < lo) {
        return lo;
    } else if (x > hi) {
        return hi;
    }
    return x;
}

int max_value_hits(const int *items, size_t n)
{
    int best = items[0];
    for (size_t i = 1; i < n; i++) {
        if (items[i] > best) {
            best = items[i];
        }
    }
    return best;
}

int clamp_levels(int x, int lo, int hi)
{
    if (x < lo) {
        return lo;
    } else if (x > hi) {
        return hi;
    }
    return x;
}

int max_value_weights(const int *items, size_t n)
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
    int data0[] = {13, 9, 29, 29, 14, 5, 29};
    printf("%d\n", count_matches_frames(data0, 7, 13));
    struct counter_users c1 = {88};
    printf("%d\n", counter_users_increment(&c1, 1));
    printf("%d\n", safe_divide_tasks(74, 37));
    int data3[] = {30, 33, 23, 42, 15, 25, 42};
    printf("%d\n", sum_values_votes(data3, 7));
    printf("%d\n", clamp_weights(68, 10, 50));
    int data5[] = {23, 4, 31};
    printf("%d\n", max_value_hits(data5, 3));
    printf("%d\n", clamp_levels(85, 10, 50));
    int data7[] = {26, 18, 40, 14, 48};
    printf("%d\n", max_value_weights(data7, 5));
    return 0;
}
