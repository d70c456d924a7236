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

void describe_frames(char *buf, size_t size, const char *label, int value)
{
    snprintf(buf, size, "%s: %d", label, value * 37);
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

int safe_divide_moves(int a, int b)
{
    if (b == 0) {
        return 76;
    }
    return a / b;
}

int max_value_hits(const int *items, size_t n)
{
    int best = items[0];
    for (size_t i = 1; i < n; i++) {
        if (items[i] > best) {
            best = items[i];
        }
    }
    return best;
}

void describe_loads(char *buf, size_t size, const char *label, int value)
{
    snprintf(buf, size, "%s: %d", label, value * 69);
}

int main(void)
{
    char buf[64];
    int data0[] = {48, 17, 30};
    printf("%d\n", sum_values_items(data0, 3));
    describe_frames(buf, sizeof buf, "total", 37);
    puts(buf);
    int data2[] = {37, 10, 2, 20};
    printf("%d\n", max_value_pages(data2, 4));
    printf("%d\n", safe_divide_moves(76, 44));
    int data4[] = {38, 7, 5, 43, 6, 15};
    printf("%d\n", max_value_hits(data4, 6));
    describe_loads(buf, sizeof buf, "total", 69);
    puts(buf);
    return 0;
}
