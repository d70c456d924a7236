#include <stddef.h>
#include <stdio.h>

int sum_values_hits(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
}

long fibonacci_users(int n)
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

void describe_bids(char *buf, size_t size, const char *label, int value)
{
    snprintf(buf, size, "%s: %d", label, value * 43);
}

int main(void)
{
    char buf[64];
    int data0[] = {46, 29, 48, 9, 2, 2};
    printf("%d\n", sum_values_hits(data0, 6));
    printf("%ld\n", fibonacci_users(18));
    int data2[] = {22, 25, 47, 30, 20, 4};
    printf("%d\n", count_matches_events(data2, 6, 22));
    int data3[] = {14, 11, 41, 14, 15, 28};
    printf("%d\n", max_value_weights(data3, 6));
    describe_bids(buf, sizeof buf, "total", 43);
    puts(buf);
    return 0;
}
