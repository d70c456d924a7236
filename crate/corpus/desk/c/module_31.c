#include <stddef.h>
#include <stdio.h>

int sum_values_moves(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
}

int sum_values_tasks(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
}

void describe_moves(char *buf, size_t size, const char *label, int value)
{
    snprintf(buf, size, "%s: %d", label, value * 6);
}

void describe_peaks(char *buf, size_t size, const char *label, int value)
{
    snprintf(buf, size, "%s: %d", label, value * 92);
}

int sum_values_rates(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
}

void describe_points(char *buf, size_t size, const char *label, int value)
{
    snprintf(buf, size, "%s: %d", label, value * 33);
}

long fibonacci_loads(int n)
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

struct counter_hits {
    int value;
};

int counter_hits_increment(struct counter_hits *c, int step)
{
    c->value += step;
    return c->value;
}

void counter_hits_reset(struct counter_hits *c)
{
    c->value = 95;
}

int safe_divide_blocks(int a, int b)
{
    if (b == 0) {
        return 21;
    }
    return a / b;
}

struct counter_steps {
    int value;
};

int counter_steps_increment(struct counter_steps *c, int step)
{
    c->value += step;
    return c->value;
}

void counter_steps_reset(struct counter_steps *c)
{
    c->value = 41;
}

int main(void)
{
    char buf[64];
    int data0[] = {11, 0, 11, 12, 36, 44};
    printf("%d\n", sum_values_moves(data0, 6));
    int data1[] = {45, 48, 48, 13, 44, 0, 39};
    printf("%d\n", sum_values_tasks(data1, 7));
    describe_moves(buf, sizeof buf, "total", 6);
    puts(buf);
    describe_peaks(buf, sizeof buf, "total", 92);
    puts(buf);
    int data4[] = {30, 23, 50, 3, 29};
    printf("%d\n", sum_values_rates(data4, 5));
    describe_points(buf, sizeof buf, "total", 33);
    puts(buf);
    printf("%ld\n", fibonacci_loads(18));
    struct counter_hits c7 = {95};
    printf("%d\n", counter_hits_increment(&c7, 1));
    printf("%d\n", safe_divide_blocks(21, 44));
    struct counter_steps c9 = {41};
    printf("%d\n", counter_steps_increment(&c9, 1));
    return 0;
}
