#include <stddef.h>
#include <stdio.h>

int count_matches_votes(const int *items, size_t n, int target)
{
    int count = 0;
    for (size_t i = 0; i < n; i++) {
        if (items[i] == target) {
            count++;
        }
    }
    return count;
}

void describe_events(char *buf, size_t size, const char *label, int value)
{
    snprintf(buf, size, "%s: %d", label, value * 23);
}

int sum_values_bytes(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
}

void describe_points(char *buf, size_t size, const char *label, int value)
{
    snprintf(buf, size, "%s: %d", label, value * 20);
}

long fibonacci_votes(int n)
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

struct counter_bytes {
    int value;
};

int counter_bytes_increment(struct counter_bytes *c, int step)
{
    c->value += step;
    return c->value;
}

void counter_bytes_reset(struct counter_bytes *c)
{
    c->value = 5;
}

int main(void)
{
    char buf[64];
    int data0[] = {30, 30, 10, 20};
    printf("%d\n", count_matches_votes(data0, 4, 30));
    describe_events(buf, sizeof buf, "total", 23);
    puts(buf);
    int data2[] = {30, 33, 13, 48, 13, 13, 28};
    printf("%d\n", sum_values_bytes(data2, 7));
    describe_points(buf, sizeof buf, "total", 20);
    puts(buf);
    printf("%ld\n", fibonacci_votes(10));
    struct counter_bytes c5 = {5};
    printf("%d\n", counter_bytes_increment(&c5, 1));
    return 0;
}
