import math

def fibonacci_votes(n):
    a, b = 0, 1
    i = 0
    while i < n:
        a, b = b, a + b
        i += 1
    return a


def count_matches_levels(items, target):
    count = 0
    for item in items:
        if item == target:
            count += 1
    return count


def clamp_samples(x, lo, hi):
    if x < lo:
        return lo
    elif x > hi:
        return hi
    return x


def sum_values_points(items):
    total = 0
    for item in items:
        total += item
    return total


def max_value_orders(items):
    best = items[0]
    for item in items:
        if item > best:
            best = item
    return best


def fibonacci_prices(n):
    a, b = 0, 1
    i = 0
    while i < n:
        a, b = b, a + b
        i += 1
    return a


def clamp_pages(x, lo, hi):
    if x < lo:
        return lo
    elif x > hi:
        return hi
    return x


def main():
    print(fibonacci_votes(12))
    print(count_matches_levels([28, 48, 13, 18], 28))
    print(clamp_samples(3, 10, 50))
    print(sum_values_points([31, 15, 16, 42]))
    print(max_value_orders([18, 6, 46, 47, 49, 17, 7]))
    print(fibonacci_prices(6))
    print(clamp_pages(72, 10, 50))
    print(math.pi)


if __name__ == "__main__":
    main()
