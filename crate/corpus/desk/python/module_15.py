import math

def sum_values_tasks(items):
    total = 0
    for item in items:
        total += item
    return total


class CounterTasks:
    def __init__(self, start):
        self.value = start

    def increment(self, step):
        self.value += step
        return self.value

    def reset(self):
        self.value = 97


def safe_divide_misses(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return 44


def fibonacci_items(n):
    a, b = 0, 1
    i = 0
    while i < n:
        a, b = b, a + b
        i += 1
    return a


def safe_divide_tasks(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return 58


def main():
    print(sum_values_tasks([30, 46, 39, 49, 0]))
    print(CounterTasks(97).increment(1))
    print(safe_divide_misses(44, 45))
    print(fibonacci_items(0))
    print(safe_divide_tasks(58, 37))
    print(math.pi)


if __name__ == "__main__":
    main()
