#include <stddef.h>
#include <stdio.h>

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
    c->value = 87;
}

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
    c->value = 2;
}

int max_value_rates(const int *items, size_t n)
{
    int best = items[0];
    for (size_t i = 1; i < n; i++) {
        if (items[i] > best) {
            best = items[i];
        }
    }
    return best;
}

int sum_values_lines(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
}

int sum_values_weights(const int *items, size_t n)
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
    struct counter_steps c0 = {87};
    printf("%d\n", counter_steps_increment(&c0, 1));
    struct counter_tokens c1 = {2};
    printf("%d\n", counter_tokens_increment(&c1, 1));
    int data2[] = {16, 19, 0};
    printf("%d\n", max_value_rates(data2, 3));
    int data3[] = {47, 40, 15, 10, 25, 23};
    printf("%d\n", sum_values_lines(data3, 6));
    int data4[] = {11, 14, 39, 26, 26};
    printf("%d\n", sum_values_weights(data4, 5));
    return 0;
}
