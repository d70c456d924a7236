import math

def sum_values_frames(items):
    total = 0
    for item in items:
        total += item
    return total


def max_value_peaks(items):
    best = items[0]
    for item in items:
        if item > best:
            best = item
    return best


def safe_divide_rates(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return 65


def count_matches_tasks(items, target):
    count = 0
    for item in items:
        if item == target:
            count += 1
    return count


def safe_divide_scores(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return 71


def main():
    print(sum_values_frames([41, 49, 25, 49, 36, 12, 38]))
    print(max_value_peaks([47, 45, 47]))
    print(safe_divide_rates(65, 47))
    print(count_matches_tasks([43, 8, 6, 16, 27, 37], 43))
    print(safe_divide_scores(71, 50))
    print(math.pi)


if __name__ == "__main__":
    main()
