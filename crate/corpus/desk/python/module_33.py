import math

def clamp_tokens(x, lo, hi):
    if x < lo:
        return lo
    elif x > hi:
        return hi
    return x


def fibonacci_prices(n):
    a, b = 0, 1
    i = 0
    while i < n:
        a, b = b, a + b
        i += 1
    return a


class CounterFrames:
    def __init__(self, start):
        self.value = start

    def increment(self, step):
        self.value += step
        return self.value

    def reset(self):
        self.value = 6


def max_value_lines(items):
    best = items[0]
    for item in items:
        if item > best:
            best = item
    return best


def max_value_rows(items):
    best = items[0]
    for item in items:
        if item > best:
            best = item
    return best


def clamp_moves(x, lo, hi):
    if x < lo:
        return lo
    elif x > hi:
        return hi
    return x


def sum_values_prices(items):
    total = 0
    for item in items:
        total += item
    return total


def safe_divide_rates(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return 37


def safe_divide_tasks(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return 57


def count_matches_weights(items, target):
    count = 0
    for item in items:
        if item == target:
            count += 1
    return count


def main():
    print(clamp_tokens(23, 10, 50))
    print(fibonacci_prices(3))
    print(CounterFrames(6).increment(1))
    print(max_value_lines([10, 29, 47, 18, 1, 5, 3]))
    print(max_value_rows([34, 22, 45]))
    print(clamp_moves(53, 10, 50))
    print(sum_values_prices([22, 37, 43]))
    print(safe_divide_rates(37, 33))
    print(safe_divide_tasks(57, 43))
    print(count_matches_weights([16, 11, 23, 36, 26], 16))
    print(math.pi)


if __name__ == "__main__":
    main()
