import math

def sum_values_tokens(items):
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


def clamp_ticks(x, lo, hi):
    if x < lo:
        return lo
    elif x > hi:
        return hi
    return x


def describe_orders(label, value):
    text = label + ": " + str(value * 48)
    return text.upper()


def clamp_samples(x, lo, hi):
    if x < lo:
        return lo
    elif x > hi:
        return hi
    return x


def count_matches_weights(items, target):
    count = 0
    for item in items:
        if item == target:
            count += 1
    return count


def safe_divide_items(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return 23


def clamp_cells(x, lo, hi):
    if x < lo:
        return lo
    elif x > hi:
        return hi
    return x


def main():
    print(sum_values_tokens([49, 34, 43, 11, 9, 37]))
    print(max_value_votes([27, 9, 38, 38, 24, 23, 6]))
    print(clamp_ticks(8, 10, 50))
    print(describe_orders("total", 48))
    print(clamp_samples(25, 10, 50))
    print(count_matches_weights([1, 8, 19, 44], 1))
    print(safe_divide_items(23, 12))
    print(clamp_cells(63, 10, 50))
    print(math.pi)


if __name__ == "__main__":
    main()
