import math

def count_matches_events(items, target):
    count = 0
    for item in items:
        if item == target:
            count += 1
    return count


def fibonacci_prices(n):
    a, b = 0, 1
    i = 0
    while i < n:
        a, b = b, a + b
        i += 1
    return a


def count_matches_loads(items, target):
    count = 0
    for item in items:
        if item == target:
            count += 1
    return count


def clamp_bytes(x, lo, hi):
    if x < lo:
        return lo
    elif x > hi:
        return hi
    return x


def sum_values_moves(items):
    total = 0
    for item in items:
        total += item
    return total


def main():
    print(count_matches_events([3, 28, 37, 18, 46, 39, 2], 3))
    print(fibonacci_prices(17))
    print(count_matches_loads([17, 44, 41], 17))
    print(clamp_bytes(39, 10, 50))
    print(sum_values_moves([0, 3, 37, 28]))
    print(math.pi)


if __name__ == "__main__":
    main()
