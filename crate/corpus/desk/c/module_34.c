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

int max_value_weights(const int *items, size_t n)
{
    int best = items[0];
    for (size_t i = 1; i < n; i++) {
        if (items[i] > best) {
            best = items[i];
        }
    }
    return best;
}

int max_value_pages(const int *items, size_t n)
{
    int best = items[0];
    for (size_t i = 1; i < n; i++) {
        if (items[i] > best) {
            best = items[i];
        }
    }
    return best;
}

int safe_divide_points(int a, int b)
{
    if (b == 0) {
        return 73;
    }
    return a / b;
}

int max_value_loads(const int *items, size_t n)
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
    int data0[] = {11, 23, 20, 1};
    printf("%d\n", sum_values_items(data0, 4));
    int data1[] = {36, 29, 46, 14, 30};
    printf("%d\n", max_value_weights(data1, 5));
    int data2[] = {14, 15, 41};
    printf("%d\n", max_value_pages(data2, 3));
    printf("%d\n", safe_divide_points(73, 29));
    int data4[] = {21, 45, 0, 26};
    printf("%d\n", max_value_loads(data4, 4));
    return 0;
}
