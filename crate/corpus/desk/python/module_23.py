import math

class CounterTokens:
    def __init__(self, start):
        self.value = start

    def increment(self, step):
        self.value += step
        return self.value

    def reset(self):
        self.value = 48


class CounterRows:
    def __init__(self, start):
        self.value = start

    def increment(self, step):
        self.value += step
        return self.value

    def reset(self):
        self.value = 61


def count_matches_ticks(items, target):
    count = 0
    for item in items:
        if item == target:
            count += 1
    return count


def safe_divide_lines(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return 61


def fibonacci_pages(n):
    a, b = 0, 1
    i = 0
    while i < n:
        a, b = b, a + b
        i += 1
    return a


def sum_values_pages(items):
    total = 0
    for item in items:
        total += item
    return total


def safe_divide_prices(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return 30


def describe_hits(label, value):
    text = label + ": " + str(value * 30)
    return text.upper()


def main():
    print(CounterTokens(48).increment(1))
    print(CounterRows(61).increment(1))
    print(count_matches_ticks([6, 21, 16, 20], 6))
    print(safe_divide_lines(61, 47))
    print(fibonacci_pages(16))
    print(sum_values_pages([12, 21, 40, 41, 48, 14]))
    print(safe_divide_prices(30, 24))
    print(describe_hits("total", 30))
    print(math.pi)


if __name__ == "__main__":
    main()
