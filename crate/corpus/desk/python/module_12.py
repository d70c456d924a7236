import math

def count_matches_events(items, target):
    count = 0
    for item in items:
        if item == target:
            count += 1
    return count


def count_matches_votes(items, target):
    count = 0
    for item in items:
        if item == target:
            count += 1
    return count


def safe_divide_votes(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return 63


def clamp_rates(x, lo, hi):
    if x < lo:
        return lo
    elif x > hi:
        return hi
    return x


def sum_values_weights(items):
    total = 0
    for item in items:
        total += item
    return total


def describe_tokens(label, value):
    text = label + ": " + str(value * 66)
    return text.upper()


def fibonacci_rates(n):
    a, b = 0, 1
    i = 0
    while i < n:
        a, b = b, a + b
        i += 1
    return a


def main():
    print(count_matches_events([37, 12, 41, 9, 28, 26, 0], 37))
    print(count_matches_votes([30, 39, 14], 30))
    print(safe_divide_votes(63, 10))
    print(clamp_rates(18, 10, 50))
    print(sum_values_weights([45, 4, 32, 3, 14]))
    print(describe_tokens("total", 66))
    print(fibonacci_rates(9))
    print(math.pi)


if __name__ == "__main__":
    main()
