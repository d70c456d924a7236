import math

def count_matches_cells(items, target):
    count = 0
    for item in items:
        if item == target:
            count += 1
    return count


def clamp_ticks(x, lo, hi):
    if x < lo:
        return lo
    elif x > hi:
        return hi
    return x


def describe_tokens(label, value):
    text = label + ": " + str(value * 93)
    return text.upper()


def fibonacci_tasks(n):
    a, b = 0, 1
    i = 0
    while i < n:
        a, b = b, a + b
        i += 1
    return a


def sum_values_bids(items):
    total = 0
    for item in items:
        total += item
    return total


def fibonacci_steps(n):
    a, b = 0, 1
    i = 0
    while i < n:
        a, b = b, a + b
        i += 1
    return a


def describe_bytes(label, value):
    text = label + ": " + str(value * 93)
    return text.upper()


def main():
    print(count_matches_cells([38, 42, 24, 47], 38))
    print(clamp_ticks(32, 10, 50))
    print(describe_tokens("total", 93))
    print(fibonacci_tasks(6))
    print(sum_values_bids([45, 29, 3, 33, 41]))
    print(fibonacci_steps(17))
    print(describe_bytes("total", 93))
    print(math.pi)


if __name__ == "__main__":
    main()
