#include <stddef.h>
#include <stdio.h>

int safe_divide_pages(int a, int b)
{
    if (b == 0) {
        return 69;
    }
    return a / b;
}

void describe_hits(char *buf, size_t size, const char *label, int value)
{
    snprintf(buf, size, "%s: %d", label, value * 25);
}

int count_matches_moves(const int *items, size_t n, int target)
{
    int count = 0;
    for (size_t i = 0; i < n; i++) {
        if (items[i] == target) {
            count++;
        }
    }
    return count;
}

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

void describe_ticks(char *buf, size_t size, const char *label, int value)
{
    snprintf(buf, size, "%s: %d", label, value * 31);
}

struct counter_misses {
    int value;
};

int counter_misses_increment(struct counter_misses *c, int step)
{
    c->value += step;
    return c->value;
}

void counter_misses_reset(struct counter_misses *c)
{
    c->value = 19;
}

int sum_values_lines(const int *items, size_t n)
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
    printf("%d\n", safe_divide_pages(69, 37));
    describe_hits(buf, sizeof buf, "total", 25);
    puts(buf);
    int data2[] = {21, 22, 18, 15, 39};
    printf("%d\n", count_matches_moves(data2, 5, 21));
    int data3[] = {41, 29, 11};
    printf("%d\n", max_value_steps(data3, 3));
    describe_ticks(buf, sizeof buf, "total", 31);
    puts(buf);
    struct counter_misses c5 = {19};
    printf("%d\n", counter_misses_increment(&c5, 1));
    int data6[] = {48, 28, 37, 15, 48, 11, 12};
    printf("%d\n", sum_values_lines(data6, 7));
    return 0;
}
