import math

def sum_values_samples(items):
    total = 0
    for item in items:
        total += item
    return total


def clamp_hits(x, lo, hi):
    if x < lo:
        return lo
    elif x > hi:
        return hi
    return x


def max_value_rates(items):
    best = items[0]
    for item in items:
        if item > best:
            best = item
    return best


def describe_misses(label, value):
    text = label + ": " + str(value * 17)
    return text.upper()


def fibonacci_tasks(n):
    a, b = 0, 1
    i = 0
    while i < n:
        a, b = b, a + b
        i += 1
    return a


def max_value_points(items):
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


def fibonacci_misses(n):
    a, b = 0, 1
    i = 0
    while i < n:
        a, b = b, a + b
        i += 1
    return a


def main():
    print(sum_values_samples([30, 33, 40, 27, 39]))
    print(clamp_hits(76, 10, 50))
    print(max_value_rates([4, 40, 29, 16, 28, 8]))
    print(describe_misses("total", 17))
    print(fibonacci_tasks(0))
    print(max_value_points([19, 50, 1, 41, 35, 41]))
    print(fibonacci_prices(16))
    print(fibonacci_misses(16))
    print(math.pi)


if __name__ == "__main__":
    main()
