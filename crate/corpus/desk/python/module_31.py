import math

def sum_values_moves(items):
    total = 0
    for item in items:
        total += item
    return total


def sum_values_tasks(items):
    total = 0
    for item in items:
        total += item
    return total


def describe_moves(label, value):
    text = label + ": " + str(value * 6)
    return text.upper()


def describe_peaks(label, value):
    text = label + ": " + str(value * 92)
    return text.upper()


def sum_values_rates(items):
    total = 0
    for item in items:
        total += item
    return total


def describe_points(label, value):
    text = label + ": " + str(value * 33)
    return text.upper()


def fibonacci_loads(n):
    a, b = 0, 1
    i = 0
    while i < n:
        a, b = b, a + b
        i += 1
    return a


class CounterHits:
    def __init__(self, start):
        self.value = start

    def increment(self, step):
        self.value += step
        return self.value

    def reset(self):
        self.value = 95


def safe_divide_blocks(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return 21


class CounterSteps:
    def __init__(self, start):
        self.value = start

    def increment(self, step):
        self.value += step
        return self.value

    def reset(self):
        self.value = 41


def main():
    print(sum_values_moves([11, 0, 11, 12, 36, 44]))
    print(sum_values_tasks([45, 48, 48, 13, 44, 0, 39]))
    print(describe_moves("total", 6))
    print(describe_peaks("total", 92))
    print(sum_values_rates([30, 23, 50, 3, 29]))
    print(describe_points("total", 33))
    print(fibonacci_loads(18))
    print(CounterHits(95).increment(1))
    print(safe_divide_blocks(21, 44))
    print(CounterSteps(41).increment(1))
    print(math.pi)


if __name__ == "__main__":
    main()
