#include <stddef.h>
#include <stdio.h>

int sum_values_users(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
}

int clamp_cells(int x, int lo, int hi)
{
    if (x < lo) {
        return lo;
    } else if (x > hi) {
        return hi;
    }
    return x;
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

int clamp_tokens(int x, int lo, int hi)
{
    if (x < lo) {
        return lo;
    } else if (x > hi) {
        return hi;
    }
    return x;
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
    c->value = 69;
}

int main(void)
{
    char buf[64];
    int data0[] = {50, 18, 24, 24};
    printf("%d\n", sum_values_users(data0, 4));
    printf("%d\n", clamp_cells(35, 10, 50));
    int data2[] = {11, 28, 18};
    printf("%d\n", max_value_steps(data2, 3));
    printf("%d\n", clamp_tokens(62, 10, 50));
    struct counter_tokens c4 = {69};
    printf("%d\n", counter_tokens_increment(&c4, 1));
    return 0;
}
