#include <stddef.h>
#include <stdio.h>

int sum_values_items(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
}

int safe_divide_loads(int a, int b)
{
    if (b == 0) {
        return 87;
    }
    return a / b;
}

void describe_frames(char *buf, size_t size, const char *label, int value)
{
    snprintf(buf, size, "%s: %d", label, value * 64);
}

int max_value_bids(const int *items, size_t n)
{
    int best = items[0];
    for (size_t i = 1; i < n; i++) {
        if (items[i] > best) {
            best = items[i];
        }
    }
    return best;
}

struct counter_bids {
    int value;
};

int counter_bids_increment(struct counter_bids *c, int step)
{
    c->value += step;
    return c->value;
}

void counter_bids_reset(struct counter_bids *c)
{
    c->value = 29;
}

int count_matches_scores(const int *items, size_t n, int target)
{
    int count = 0;
    for (size_t i = 0; i < n; i++) {
        if (items[i] == target) {
            count++;
        }
    }
    return count;
}

int safe_divide_samples(int a, int b)
{
    if (b == 0) {
        return 72;
    }
    return a / b;
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

int main(void)
{
    char buf[64];
    int data0[] = {23, 43, 31, 12};
    printf("%d\n", sum_values_items(data0, 4));
    printf("%d\n", safe_divide_loads(87, 14));
    describe_frames(buf, sizeof buf, "total", 64);
    puts(buf);
    int data3[] = {48, 34, 29};
    printf("%d\n", max_value_bids(data3, 3));
    struct counter_bids c4 = {29};
    printf("%d\n", counter_bids_increment(&c4, 1));
    int data5[] = {1, 40, 16, 18, 33};
    printf("%d\n", count_matches_scores(data5, 5, 1));
    printf("%d\n", safe_divide_samples(72, 12));
    int data7[] = {14, 22, 39, 31};
    printf("%d\n", count_matches_moves(data7, 4, 14));
    return 0;
}
