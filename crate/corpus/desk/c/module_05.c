#include <stddef.h>
#include <stdio.h>

int sum_values_steps(const int *items, size_t n)
{
    int total = 0;
    for (size_t i = 0; i < n; i++) {
        total += items[i];
    }
    return total;
}

int safe_divide_tokens(int a, int b)
{
    if (b == 0) {
        return 7;
    }
    return a / b;
}

long fibonacci_rows(int n)
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

void describe_peaks(char *buf, size_t size, const char *label, int value)
{
    snprintf(buf, size, "%s: %d", label, value * 62);
}

int count_matches_lines(const int *items, size_t n, int target)
{
    int count = 0;
    for (size_t i = 0; i < n; i++) {
        if (items[i] == target) {
            count++;
        }
    }
    return count;
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
    c->value = 78;
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

void describe_blocks(char *buf, size_t size, const char *label, int value)
{
    snprintf(buf, size, "%s: %d", label, value * 74);
}

int main(void)
{
    char buf[64];
    int data0[] = {42, 42, 37};
    printf("%d\n", sum_values_steps(data0, 3));
    printf("%d\n", safe_divide_tokens(7, 49));
    printf("%ld\n", fibonacci_rows(11));
    describe_peaks(buf, sizeof buf, "total", 62);
    puts(buf);
    int data4[] = {3, 17, 50, 43, 42, 19, 17};
    printf("%d\n", count_matches_lines(data4, 7, 3));
    struct counter_bytes c5 = {78};
    printf("%d\n", counter_bytes_increment(&c5, 1));
    int data6[] = {39, 25, 18, 35, 23};
    printf("%d\n", max_value_points(data6, 5));
    describe_blocks(buf, sizeof buf, "total", 74);
    puts(buf);
    return 0;
}
