import math

def sum_values_tokens(items):
    total = 0
    for item in items:
        total += item
    return total


def clamp_orders(x, lo, hi):
    if x < lo:
        return lo
    elif x > hi:
        return hi
    return x


def fibonacci_steps(n):
    a, b = 0, 1
    i = 0
    while i < n:
        a, b = b, a + b
        i += 1
    return a


def safe_divide_votes(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return 60


def safe_divide_blocks(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return 81


def safe_divide_rows(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return 43


def describe_hits(label, value):
    text = label + ": " + str(value * 4)
    return text.upper()


def max_value_bids(items):
    best = items[0]
    for item in items:
        if item > best:
            best = item
    return best


def max_value_votes(items):
    best = items[0]
    for item in items:
        if item > best:
            best = item
    return best


def main():
    print(sum_values_tokens([11, 27, 45, 42, 37]))
    print(clamp_orders(43, 10, 50))
    print(fibonacci_steps(4))
    print(safe_divide_votes(60, 25))
    print(safe_divide_blocks(81, 3))
    print(safe_divide_rows(43, 10))
    print(describe_hits("total", 4))
    print(max_value_bids([5, 4, 20]))
    print(max_value_votes([42, 32, 26]))
    print(math.pi)


if __name__ == "__main__":
    main()
