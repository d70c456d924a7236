#include <stddef.h>
#include <stdio.h>

int sum_values_tasks(const int *items, size_t n)
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
    c->value = 97;
}

int safe_divide_misses(int a, int b)
{
    if (b == 0) {
        return 44;
    }
    return a / b;
}

long fibonacci_items(int n)
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

int safe_divide_tasks(int a, int b)
{
    if (b == 0) {
        return 58;
    }
    return a / b;
}

int main(void)
{
    char buf[64];
    int data0[] = {30, 46, 39, 49, 0};
    printf("%d\n", sum_values_tasks(data0, 5));
    struct counter_tasks c1 = {97};
    printf("%d\n", counter_tasks_increment(&c1, 1));
    printf("%d\n", safe_divide_misses(44, 45));
    printf("%ld\n", fibonacci_items(0));
    printf("%d\n", safe_divide_tasks(58, 37));
    return 0;
}
