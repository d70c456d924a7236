#include <stddef.h>
#include <stdio.h>

int max_value_misses(const int *items, size_t n)
{
    int best = items[0];
    for (size_t i = 1; i < n; i++) {
        if (items[i] > best) {
            best = items[i];
        }
    }
    return best;
}

int clamp_levels(int x, int lo, int hi)
{
    if (x < lo) {
        return lo;
    } else if (x > hi) {
        return hi;
    }
    return x;
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

void describe_frames(char *buf, size_t size, const char *label, int value)
{
    snprintf(buf, size, "%s: %d", label, value * 8);
}

int sum_values_votes(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
}

int count_matches_hits(const int *items, size_t n, int target)
{
    int count = 0;
    for (size_t i = 0; i < n; i++) {
        if (items[i] == target) {
            count++;
        }
    }
    return count;
}

void describe_hits(char *buf, size_t size, const char *label, int value)
{
    snprintf(buf, size, "%s: %d", label, value * 24);
}

int max_value_jobs(const int *items, size_t n)
{
    int best = items[0];
    for (size_t i = 1; i < n; i++) {
        if (items[i] > best) {
            best = items[i];
        }
    }
    return best;
}

int main(void)
{
    char buf[64];
    int data0[] = {9, 45, 1};
    printf("%d\n", max_value_misses(data0, 3));
    printf("%d\n", clamp_levels(21, 10, 50));
    printf("%d\n", clamp_cells(5, 10, 50));
    describe_frames(buf, sizeof buf, "total", 8);
    puts(buf);
    int data4[] = {3, 45, 11, 42, 31, 27};
    printf("%d\n", sum_values_votes(data4, 6));
    int data5[] = {28, 10, 15, 29, 8, 11};
    printf("%d\n", count_matches_hits(data5, 6, 28));
    describe_hits(buf, sizeof buf, "total", 24);
    puts(buf);
    int data7[] = {1, 38, 20, 9, 19, 28, 41};
    printf("%d\n", max_value_jobs(data7, 7));
    return 0;
}
