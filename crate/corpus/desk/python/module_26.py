import math

def sum_values_tasks(items):
    total = 0
    for item in items:
        total += item
    return total


def fibonacci_misses(n):
    a, b = 0, 1
    i = 0
    while i < n:
        a, b = b, a + b
        i += 1
    return a


def safe_divide_cells(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return 80


def fibonacci_blocks(n):
    a, b = 0, 1
    i = 0
    while i < n:
        a, b = b, a + b
        i += 1
    return a


def clamp_lines(x, lo, hi):
    if x < lo:
        return lo
    elif x > hi:
        return hi
    return x


def main():
    print(sum_values_tasks([46, 34, 20, 49, 34, 47]))
    print(fibonacci_misses(16))
    print(safe_divide_cells(80, 45))
    print(fibonacci_blocks(19))
    print(clamp_lines(78, 10, 50))
    print(math.pi)


if __name__ == "__main__":
    main()
