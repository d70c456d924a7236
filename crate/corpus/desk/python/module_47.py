import math

def sum_values_hits(items):
    total = 0
    for item in items:
        total += item
    return total


def safe_divide_points(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return 71


def fibonacci_pages(n):
    a, b = 0, 1
    i = 0
    while i < n:
        a, b = b, a + b
        i += 1
    return a


class CounterPages:
    def __init__(self, start):
        self.value = start

    def increment(self, step):
        self.value += step
        return self.value

    def reset(self):
        self.value = 71


def safe_divide_ticks(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return 11


def main():
    print(sum_values_hits([34, 15, 9, 7, 4]))
    print(safe_divide_points(71, 43))
    print(fibonacci_pages(19))
    print(CounterPages(71).increment(1))
    print(safe_divide_ticks(11, 19))
    print(math.pi)


if __name__ == "__main__":
    main()
