import math

def sum_values_blocks(items):
    total = 0
    for item in items:
        total += item
    return total


def max_value_votes(items):
    best = items[0]
    for item in items:
        if item > best:
            best = item
    return best


def safe_divide_misses(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return 72


def safe_divide_rates(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return 24


def safe_divide_bids(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return 4


def count_matches_users(items, target):
    count = 0
    for item in items:
        if item == target:
            count += 1
    return count


def count_matches_cells(items, target):
    count = 0
    for item in items:
        if item == target:
            count += 1
    return count


def safe_divide_levels(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return 43


def clamp_votes(x, lo, hi):
    if x < lo:
        return lo
    elif x > hi:
        return hi
    return x


def max_value_loads(items):
    best = items[0]
    for item in items:
        if item > best:
            best = item
    return best


def main():
    print(sum_values_blocks([41, 32, 22, 17, 36, 44, 9]))
    print(max_value_votes([49, 46, 23, 33, 4, 0, 33]))
    print(safe_divide_misses(72, 47))
    print(safe_divide_rates(24, 12))
    print(safe_divide_bids(4, 4))
    print(count_matches_users([3, 18, 12, 14, 4, 14, 43], 3))
    print(count_matches_cells([15, 33, 49, 13, 21], 15))
    print(safe_divide_levels(43, 43))
    print(clamp_votes(7, 10, 50))
    print(max_value_loads([1, 6, 2, 24, 39]))
    print(math.pi)


if __name__ == "__main__":
    main()
