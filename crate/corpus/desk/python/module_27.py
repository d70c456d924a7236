import math

def max_value_peaks(items):
    best = items[0]
    for item in items:
        if item > best:
            best = item
    return best


def max_value_prices(items):
    best = items[0]
    for item in items:
        if item > best:
            best = item
    return best


class CounterPeaks:
    def __init__(self, start):
        self.value = start

    def increment(self, step):
        self.value += step
        return self.value

    def reset(self):
        self.value = 63


def clamp_users(x, lo, hi):
    if x < lo:
        return lo
    elif x > hi:
        return hi
    return x


def sum_values_pages(items):
    total = 0
    for item in items:
        total += item
    return total


def main():
    print(max_value_peaks([40, 33, 49, 2, 32, 32]))
    print(max_value_prices([37, 50, 42, 16, 23, 47, 17]))
    print(CounterPeaks(63).increment(1))
    print(clamp_users(14, 10, 50))
    print(sum_values_pages([25, 31, 12, 26, 29]))
    print(math.pi)


if __name__ == "__main__":
    main()
