#include <stddef.h>
#include <stdio.h>

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
    c->value = 43;
}

void describe_ticks(char *buf, size_t size, const char *label, int value)
{
    snprintf(buf, size, "%s: %d", label, value * 20);
}

int max_value_points(const int *items, size_t n)
{
    int best = items[0];
    for (size_t i = 1; i < n; i++) {
        if (items[i] > best) {
            best = items[i];
        }
    }
    return best;
}

int max_value_peaks(const int *items, size_t n)
{
    int best = items[0];
    for (size_t i = 1; i < n; i++) {
        if (items[i] > best) {
            best = items[i];
        }
    }
    return best;
}

int sum_values_cells(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
}

int count_matches_tasks(const int *items, size_t n, int target)
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

void describe_hits(char *buf, size_t size, const char *label, int value)
{
    snprintf(buf, size, "%s: %d", label, value * 37);
}

int sum_values_pages(const int *items, size_t n)
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
    struct counter_jobs c0 = {43};
    printf("%d\n", counter_jobs_increment(&c0, 1));
    describe_ticks(buf, sizeof buf, "total", 20);
    puts(buf);
    int data2[] = {50, 14, 23, 15};
    printf("%d\n", max_value_points(data2, 4));
    int data3[] = {28, 46, 28};
    printf("%d\n", max_value_peaks(data3, 3));
    int data4[] = {28, 23, 29, 49};
    printf("%d\n", sum_values_cells(data4, 4));
    int data5[] = {42, 23, 36, 22, 26, 48};
    printf("%d\n", count_matches_tasks(data5, 6, 42));
    int data6[] = {32, 15, 31, 9, 19, 3, 14};
    printf("%d\n", max_value_steps(data6, 7));
    describe_hits(buf, sizeof buf, "total", 37);
    puts(buf);
    int data8[] = {41, 2, 44, 46, 7, 6, 35};
    printf("%d\n", sum_values_pages(data8, 7));
    return 0;
}
