#include <stddef.h>
#include <stdio.h>

int sum_values_frames(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
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

int safe_divide_rates(int a, int b)
{
    if (b == 0) {
        return 65;
    }
    return a / b;
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

int safe_divide_scores(int a, int b)
{
    if (b == 0) {
        return 71;
    }
    return a / b;
}

int main(void)
{
    char buf[64];
    int data0[] = {41, 49, 25, 49, 36, 12, 38};
    printf("%d\n", sum_values_frames(data0, 7));
    int data1[] = {47, 45, 47};
    printf("%d\n", max_value_peaks(data1, 3));
    printf("%d\n", safe_divide_rates(65, 47));
    int data3[] = {43, 8, 6, 16, 27, 37};
    printf("%d\n", count_matches_tasks(data3, 6, 43));
    printf("%d\n", safe_divide_scores(71, 50));
    return 0;
}
