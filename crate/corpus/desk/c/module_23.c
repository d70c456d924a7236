#include <stddef.h>
#include <stdio.h>

struct counter_tokens {
    int value;
};

int counter_tokens_increment(struct counter_tokens *c, int step)
{
    c->value += step;
    return c->value;
}

void counter_tokens_reset(struct counter_tokens *c)
{
    c->value = 48;
}

struct counter_rows {
    int value;
};

int counter_rows_increment(struct counter_rows *c, int step)
{
    c->value += step;
    return c->value;
}

void counter_rows_reset(struct counter_rows *c)
{
    c->value = 61;
}

int count_matches_ticks(const int *items, size_t n, int target)
{
    int count = 0;
    for (size_t i = 0; i < n; i++) {
        if (items[i] == target) {
            count++;
        }
    }
    return count;
}

int safe_divide_lines(int a, int b)
{
    if (b == 0) {
        return 61;
    }
    return a / b;
}

long fibonacci_pages(int n)
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

int sum_values_pages(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
}

int safe_divide_prices(int a, int b)
{
    if (b == 0) {
        return 30;
    }
    return a / b;
}

void describe_hits(char *buf, size_t size, const char *label, int value)
{
    snprintf(buf, size, "%s: %d", label, value * 30);
}

int main(void)
{
    char buf[64];
    struct counter_tokens c0 = {48};
    printf("%d\n", counter_tokens_increment(&c0, 1));
    struct counter_rows c1 = {61};
    printf("%d\n", counter_rows_increment(&c1, 1));
    int data2[] = {6, 21, 16, 20};
    printf("%d\n", count_matches_ticks(data2, 4, 6));
    printf("%d\n", safe_divide_lines(61, 47));
    printf("%ld\n", fibonacci_pages(16));
    int data5[] = {12, 21, 40, 41, 48, 14};
    printf("%d\n", sum_values_pages(data5, 6));
    printf("%d\n", safe_divide_prices(30, 24));
    describe_hits(buf, sizeof buf, "total", 30);
    puts(buf);
    return 0;
}
