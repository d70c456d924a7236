import math

def sum_values_samples(items):
    total = 0
    for item in items:
        total += item
    return total


class CounterBytes:
    def __init__(self, start):
        self.value = start

    def increment(self, step):
        self.value += step
        return self.value

    def reset(self):
        self.value = 8


def safe_divide_bytes(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return 77


def count_matches_samples(items, target):
    count = 0
    for item in items:
        if item == target:
            count += 1
    return count


def fibonacci_weights(n):
    a, b = 0, 1
    i = 0
    while i < n:
        a, b = b, a + b
        i += 1
    return a


def main():
    print(sum_values_samples([17, 23, 26, 33, 33, 17, 19]))
    print(CounterBytes(8).increment(1))
    print(safe_divide_bytes(77, 5))
    print(count_matches_samples([5, 40, 31, 0, 24, 25, 14], 5))
    print(fibonacci_weights(18))
    print(math.pi)


if __name__ == "__main__":
    main()
