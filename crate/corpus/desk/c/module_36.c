#include <stddef.h>
#include <stdio.h>

int max_value_steps(const int *items, size_t n)
{
    int best = items[0];
    for (size_t i = 1; i < n; i++) {
        if (items[i] > best) {
            best = items[i];
        }
    }
    return best;
}

int max_value_tokens(const int *items, size_t n)
{
    int best = items[0];
    for (size_t i = 1; i < n; i++) {
        if (items[i] > best) {
            best = items[i];
        }
    }
    return best;
}

int sum_values_ticks(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
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

void describe_weights(char *buf, size_t size, const char *label, int value)
{
    snprintf(buf, size, "%s: %d", label, value * 4);
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
    c->value = 78;
}

int count_matches_levels(const int *items, size_t n, int target)
{
    int count = 0;
    for (size_t i = 0; i < n; i++) {
        if (items[i] == target) {
            count++;
        }
    }
    return count;
}

int sum_values_levels(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
}

int main(void)
{
    char buf[64];
    int data0[] = {6, 38, 32, 16, 30, 16, 8};
    printf("%d\n", max_value_steps(data0, 7));
    int data1[] = {8, 1, 4, 11, 19, 45, 23};
    printf("%d\n", max_value_tokens(data1, 7));
    int data2[] = {9, 20, 0, 1, 7};
    printf("%d\n", sum_values_ticks(data2, 5));
    int data3[] = {22, 20, 34, 34, 50};
    printf("%d\n", max_value_rows(data3, 5));
    describe_weights(buf, sizeof buf, "total", 4);
    puts(buf);
    struct counter_jobs c5 = {78};
    printf("%d\n", counter_jobs_increment(&c5, 1));
    int data6[] = {1, 14, 42};
    printf("%d\n", count_matches_levels(data6, 3, 1));
    int data7[] = {48, 31, 21, 25, 13, 37, 20};
    printf("%d\n", sum_values_levels(data7, 7));
    return 0;
}
