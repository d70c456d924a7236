import math

def sum_values_misses(items):
    total = 0
    for item in items:
        total += item
    return total


def clamp_orders(x, lo, hi):
    if x < lo:
        return lo
    elif x > hi:
        return hi
    return x


def count_matches_samples(items, target):
    count = 0
    for item in items:
        if item == target:
            count += 1
    return count


def count_matches_pages(items, target):
    count = 0
    for item in items:
        if item == target:
            count += 1
    return count


def fibonacci_scores(n):
    a, b = 0, 1
    i = 0
    while i < n:
        a, b = b, a + b
        i += 1
    return a


class CounterLevels:
    def __init__(self, start):
        self.value = start

    def increment(self, step):
        self.value += step
        return self.value

    def reset(self):
        self.value = 78


def count_matches_tokens(items, target):
    count = 0
    for item in items:
        if item == target:
            count += 1
    return count


def max_value_scores(items):
    best = items[0]
    for item in items:
        if item > best:
            best = item
    return best


def safe_divide_prices(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return 28


def main():
    print(sum_values_misses([14, 50, 2, 26]))
    print(clamp_orders(74, 10, 50))
    print(count_matches_samples([5, 33, 37, 41, 44], 5))
    print(count_matches_pages([44, 4, 6, 27, 45], 44))
    print(fibonacci_scores(4))
    print(CounterLevels(78).increment(1))
    print(count_matches_tokens([5, 48, 27], 5))
    print(max_value_scores([31, 17, 1]))
    print(safe_divide_prices(28, 45))
    print(math.pi)


if __name__ == "__main__":
    main()
