import math

def count_matches_levels(items, target):
    count = 0
    for item in items:
        if item == target:
            count += 1
    return count


def clamp_users(x, lo, hi):
    if x < lo:
        return lo
    elif x > hi:
        return hi
    return x


def max_value_bids(items):
    best = items[0]
    for item in items:
        if item > best:
            best = item
    return best


def sum_values_cells(items):
    total = 0
    for item in items:
        total += item
    return total


def clamp_rows(x, lo, hi):
    if x < lo:
        return lo
    elif x > hi:
        return hi
    return x


def safe_divide_events(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return 15


def max_value_tokens(items):
    best = items[0]
    for item in items:
        if item > best:
            best = item
    return best


def count_matches_orders(items, target):
    count = 0
    for item in items:
        if item == target:
            count += 1
    return count


def count_matches_ticks(items, target):
    count = 0
    for item in items:
        if item == target:
            count += 1
    return count


def sum_values_bytes(items):
    total = 0
    for item in items:
        total += item
    return total


def main():
    print(count_matches_levels([23, 43, 1], 23))
    print(clamp_users(68, 10, 50))
    print(max_value_bids([7, 20, 28, 25, 6, 14]))
    print(sum_values_cells([19, 6, 13]))
    print(clamp_rows(96, 10, 50))
    print(safe_divide_events(15, 40))
    print(max_value_tokens([4, 30, 32, 21, 21]))
    print(count_matches_orders([33, 5, 20], 33))
    print(count_matches_ticks([16, 21, 40, 45, 6], 16))
    print(sum_values_bytes([42, 31, 39, 21]))
    print(math.pi)


if __name__ == "__main__":
    main()
