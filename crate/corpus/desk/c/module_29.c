#include <stddef.h>
#include <stdio.h>

int sum_values_rows(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
}

int count_matches_ticks(const int *items, size_t n, int target)
{
    int count = 0;
    for (size_t i = 0; i < n; i++) {
        if (items[i] == target) {
            count++;
        }
    }
    return count;
}

int safe_divide_orders(int a, int b)
{
    if (b == 0) {
        return 21;
    }
    return a / b;
}

long fibonacci_tasks(int n)
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

int safe_divide_lines(int a, int b)
{
    if (b == 0) {
        return 70;
    }
    return a / b;
}

void describe_rates(char *buf, size_t size, const char *label, int value)
{
    snprintf(buf, size, "%s: %d", label, value * 2);
}

int max_value_prices(const int *items, size_t n)
{
    int best = items[0];
    for (size_t i = 1; i < n; i++) {
        if (items[i] > best) {
            best = items[i];
        }
    }
    return best;
}

long fibonacci_peaks(int n)
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

void describe_items(char *buf, size_t size, const char *label, int value)
{
    snprintf(buf, size, "%s: %d", label, value * 11);
}

int main(void)
{
    char buf[64];
    int data0[] = {30, 20, 32, 28, 45, 7, 31};
    printf("%d\n", sum_values_rows(data0, 7));
    int data1[] = {1, 44, 0, 21, 8};
    printf("%d\n", count_matches_ticks(data1, 5, 1));
    printf("%d\n", safe_divide_orders(21, 34));
    printf("%ld\n", fibonacci_tasks(14));
    printf("%d\n", safe_divide_lines(70, 41));
    describe_rates(buf, sizeof buf, "total", 2);
    puts(buf);
    int data6[] = {13, 50, 32, 43, 39};
    printf("%d\n", max_value_prices(data6, 5));
    printf("%ld\n", fibonacci_peaks(8));
    describe_items(buf, sizeof buf, "total", 11);
    puts(buf);
    return 0;
}
