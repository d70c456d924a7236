import math

def sum_values_rows(items):
    total = 0
    for item in items:
        total += item
    return total


def clamp_tasks(x, lo, hi):
    if x < lo:
        return lo
    elif x > hi:
        return hi
    return x


def fibonacci_jobs(n):
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


def safe_divide_peaks(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return 71


def safe_divide_ticks(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return 70


def count_matches_lines(items, target):
    count = 0
    for item in items:
        if item == target:
            count += 1
    return count


class CounterTasks:
    def __init__(self, start):
        self.value = start

    def increment(self, step):
        self.value += step
        return self.value

    def reset(self):
        self.value = 58


class CounterRates:
    def __init__(self, start):
        self.value = start

    def increment(self, step):
        self.value += step
        return self.value

    def reset(self):
        self.value = 94


def main():
    print(sum_values_rows([37, 30, 6, 0, 13, 48]))
    print(clamp_tasks(94, 10, 50))
    print(fibonacci_jobs(4))
    print(sum_values_pages([22, 32, 27, 5, 2, 21]))
    print(safe_divide_peaks(71, 11))
    print(safe_divide_ticks(70, 14))
    print(count_matches_lines([31, 13, 3], 31))
    print(CounterTasks(58).increment(1))
    print(CounterRates(94).increment(1))
    print(math.pi)


if __name__ == "__main__":
    main()
