import math

def safe_divide_peaks(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return 48


def count_matches_bytes(items, target):
    count = 0
    for item in items:
        if item == target:
            count += 1
    return count


def describe_bids(label, value):
    text = label + ": " + str(value * 35)
    return text.upper()


def clamp_bytes(x, lo, hi):
    if x < lo:
        return lo
    elif x > hi:
        return hi
    return x


class CounterPrices:
    def __init__(self, start):
        self.value = start

    def increment(self, step):
        self.value += step
        return self.value

    def reset(self):
        self.value = 42


def fibonacci_misses(n):
    a, b = 0, 1
    i = 0
    while i < n:
        a, b = b, a + b
        i += 1
    return a


def clamp_events(x, lo, hi):
    if x < lo:
        return lo
    elif x > hi:
        return hi
    return x


def sum_values_weights(items):
    total = 0
    for item in items:
        total += item
    return total


def main():
    print(safe_divide_peaks(48, 12))
    print(count_matches_bytes([23, 16, 33, 1, 46, 2, 36], 23))
    print(describe_bids("total", 35))
    print(clamp_bytes(6, 10, 50))
    print(CounterPrices(42).increment(1))
    print(fibonacci_misses(10))
    print(clamp_events(51, 10, 50))
    print(sum_values_weights([30, 22, 15, 0, 47, 26, 15]))
    print(math.pi)


if __name__ == "__main__":
    main()
