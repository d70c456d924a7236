import math

def max_value_misses(items):
    best = items[0]
    for item in items:
        if item > best:
            best = item
    return best


def clamp_levels(x, lo, hi):
    if x < lo:
        return lo
    elif x > hi:
        return hi
    return x


def clamp_cells(x, lo, hi):
    if x < lo:
        return lo
    elif x > hi:
        return hi
    return x


def describe_frames(label, value):
    text = label + ": " + str(value * 8)
    return text.upper()


def sum_values_votes(items):
    total = 0
    for item in items:
        total += item
    return total


def count_matches_hits(items, target):
    count = 0
    for item in items:
        if item == target:
            count += 1
    return count


def describe_hits(label, value):
    text = label + ": " + str(value * 24)
    return text.upper()


def max_value_jobs(items):
    best = items[0]
    for item in items:
        if item > best:
            best = item
    return best


def main():
    print(max_value_misses([9, 45, 1]))
    print(clamp_levels(21, 10, 50))
    print(clamp_cells(5, 10, 50))
    print(describe_frames("total", 8))
    print(sum_values_votes([3, 45, 11, 42, 31, 27]))
    print(count_matches_hits([28, 10, 15, 29, 8, 11], 28))
    print(describe_hits("total", 24))
    print(max_value_jobs([1, 38, 20, 9, 19, 28, 41]))
    print(math.pi)


if __name__ == "__main__":
    main()
