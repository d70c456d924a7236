#include <stddef.h>
#include <stdio.h>

int sum_values_misses(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
}

int safe_divide_lines(int a, int b)
{
    if (b == 0) {
        return 19;
    }
    return a / b;
}

void describe_frames(char *buf, size_t size, const char *label, int value)
{
    snprintf(buf, size, "%s: %d", label, value * 69);
}

int max_value_events(const int *items, size_t n)
{
    int best = items[0];
    for (size_t i = 1; i < n; i++) {
        if (items[i] > best) {
            best = items[i];
        }
    }
    return best;
}

struct counter_lines {
    int value;
};

int counter_lines_increment(struct counter_lines *c, int step)
{
    c->value += step;
    return c->value;
}

void counter_lines_reset(struct counter_lines *c)
{
    c->value = 2;
}

int main(void)
{
    char buf[64];
    int data0[] = {24, 50, 6, 45, 47};
    printf("%d\n", sum_values_misses(data0, 5));
    printf("%d\n", safe_divide_lines(19, 6));
    describe_frames(buf, sizeof buf, "total", 69);
    puts(buf);
    int data3[] = {23, 44, 21};
    printf("%d\n", max_value_events(data3, 3));
    struct counter_lines c4 = {2};
    printf("%d\n", counter_lines_increment(&c4, 1));
    return 0;
}
