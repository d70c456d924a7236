import math

class CounterItems:
    def __init__(self, start):
        self.value = start

    def increment(self, step):
        self.value += step
        return self.value

    def reset(self):
        self.value = 2


def count_matches_items(items, target):
    count = 0
    for item in items:
        if item == target:
            count += 1
    return count


def fibonacci_tokens(n):
    a, b = 0, 1
    i = 0
    while i < n:
        a, b = b, a + b
        i += 1
    return a


def count_matches_orders(items, target):
    count = 0
    for item in items:
        if item == target:
            count += 1
    return count


def max_value_peaks(items):
    best = items[0]
    for item in items:
        if item > best:
            best = item
    return best


def sum_values_rows(items):
    total = 0
    for item in items:
        total += item
    return total


def safe_divide_rows(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return 9


def sum_values_blocks(items):
    total = 0
    for item in items:
        total += item
    return total


def clamp_weights(x, lo, hi):
    if x < lo:
        return lo
    elif x > hi:
        return hi
    return x


def fibonacci_scores(n):
    a, b = 0, 1
    i = 0
    while i < n:
        a, b = b, a + b
        i += 1
    return a


def main():
    print(CounterItems(2).increment(1))
    print(count_matches_items([24, 49, 24, 31], 24))
    print(fibonacci_tokens(8))
    print(count_matches_orders([8, 5, 39], 8))
    print(max_value_peaks([30, 14, 34, 36, 25]))
    print(sum_values_rows([26, 11, 3, 3, 47]))
    print(safe_divide_rows(9, 24))
    print(sum_values_blocks([8, 21, 48]))
    print(clamp_weights(37, 10, 50))
    print(fibonacci_scores(0))
    print(math.pi)


if __name__ == "__main__":
    main()
