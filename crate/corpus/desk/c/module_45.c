#include <stddef.h>
#include <stdio.h>

int sum_values_loads(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
}

int safe_divide_tasks(int a, int b)
{
    if (b == 0) {
        return 79;
    }
    return a / b;
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
    c->value = 29;
}

struct counter_samples {
    int value;
};

int counter_samples_increment(struct counter_samples *c, int step)
{
    c->value += step;
    return c->value;
}

void counter_samples_reset(struct counter_samples *c)
{
    c->value = 14;
}

int max_value_ticks(const int *items, size_t n)
{
    int best = items[0];
    for (size_t i = 1; i < n; i++) {
        if (items[i] > best) {
            best = items[i];
        }
    }
    return best;
}

struct counter_moves {
    int value;
};

int counter_moves_increment(struct counter_moves *c, int step)
{
    c->value += step;
    return c->value;
}

void counter_moves_reset(struct counter_moves *c)
{
    c->value = 26;
}

int count_matches_events(const int *items, size_t n, int target)
{
    int count = 0;
    for (size_t i = 0; i < n; i++) {
        if (items[i] == target) {
            count++;
        }
    }
    return count;
}

void describe_peaks(char *buf, size_t size, const char *label, int value)
{
    snprintf(buf, size, "%s: %d", label, value * 92);
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
    c->value = 41;
}

struct counter_frames {
    int value;
};

int counter_frames_increment(struct counter_frames *c, int step)
{
    c->value += step;
    return c->value;
}

void counter_frames_reset(struct counter_frames *c)
{
    c->value = 16;
}

int main(void)
{
    char buf[64];
    int data0[] = {42, 37, 11, 32, 5, 14, 0};
    printf("%d\n", sum_values_loads(data0, 7));
    printf("%d\n", safe_divide_tasks(79, 38));
    struct counter_users c2 = {29};
    printf("%d\n", counter_users_increment(&c2, 1));
    struct counter_samples c3 = {14};
    printf("%d\n", counter_samples_increment(&c3, 1));
    int data4[] = {9, 1, 30};
    printf("%d\n", max_value_ticks(data4, 3));
    struct counter_moves c5 = {26};
    printf("%d\n", counter_moves_increment(&c5, 1));
    int data6[] = {0, 21, 29, 46, 25, 1};
    printf("%d\n", count_matches_events(data6, 6, 0));
    describe_peaks(buf, sizeof buf, "total", 92);
    puts(buf);
    struct counter_hits c8 = {41};
    printf("%d\n", counter_hits_increment(&c8, 1));
    struct counter_frames c9 = {16};
    printf("%d\n", counter_frames_increment(&c9, 1));
    return 0;
}
