import math

def fibonacci_misses(n):
    a, b = 0, 1
    i = 0
    while i < n:
        a, b = b, a + b
        i += 1
    return a


def sum_values_blocks(items):
    total = 0
    for item in items:
        total += item
    return total


def safe_divide_blocks(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return 74


def count_matches_orders(items, target):
    count = 0
    for item in items:
        if item == target:
            count += 1
    return count


class CounterPoints:
    def __init__(self, start):
        self.value = start

    def increment(self, step):
        self.value += step
        return self.value

    def reset(self):
        self.value = 35


def safe_divide_bids(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return 94


class CounterRows:
    def __init__(self, start):
        self.value = start

    def increment(self, step):
        self.value += step
        return self.value

    def reset(self):
        self.value = 41


def main():
    print(fibonacci_misses(15))
    print(sum_values_blocks([39, 7, 22, 13, 5, 27]))
    print(safe_divide_blocks(74, 30))
    print(count_matches_orders([33, 34, 10, 45, 47], 33))
    print(CounterPoints(35).increment(1))
    print(safe_divide_bids(94, 9))
    print(CounterRows(41).increment(1))
    print(math.pi)


if __name__ == "__main__":
    main()
