import math

def fibonacci_orders(n):
    a, b = 0, 1
    i = 0
    while i < n:
        a, b = b, a + b
        i += 1
    return a


def count_matches_scores(items, target):
    count = 0
    for item in items:
        if item == target:
            count += 1
    return count


def sum_values_votes(items):
    total = 0
    for item in items:
        total += item
    return total


def safe_divide_points(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return 87


def sum_values_rates(items):
    total = 0
    for item in items:
        total += item
    return total


def safe_divide_loads(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return 39


def clamp_misses(x, lo, hi):
    if x < lo:
        return lo
    elif x > hi:
        return hi
    return x


def fibonacci_rows(n):
    a, b = 0, 1
    i = 0
    while i < n:
        a, b = b, a + b
        i += 1
    return a


def main():
    print(fibonacci_orders(3))
    print(count_matches_scores([18, 47, 48, 43, 10], 18))
    print(sum_values_votes([40, 43, 47, 50, 12]))
    print(safe_divide_points(87, 25))
    print(sum_values_rates([32, 45, 11, 4, 44, 40]))
    print(safe_divide_loads(39, 18))
    print(clamp_misses(87, 10, 50))
    print(fibonacci_rows(14))
    print(math.pi)


if __name__ == "__main__":
    main()
