import math

def sum_values_rows(items):
    total = 0
    for item in items:
        total += item
    return total


def count_matches_ticks(items, target):
    count = 0
    for item in items:
        if item == target:
            count += 1
    return count


def safe_divide_orders(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return 21


def fibonacci_tasks(n):
    a, b = 0, 1
    i = 0
    while i < n:
        a, b = b, a + b
        i += 1
    return a


def safe_divide_lines(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return 70


def describe_rates(label, value):
    text = label + ": " + str(value * 2)
    return text.upper()


def max_value_prices(items):
    best = items[0]
    for item in items:
        if item > best:
            best = item
    return best


def fibonacci_peaks(n):
    a, b = 0, 1
    i = 0
    while i < n:
        a, b = b, a + b
        i += 1
    return a


def describe_items(label, value):
    text = label + ": " + str(value * 11)
    return text.upper()


def main():
    print(sum_values_rows([30, 20, 32, 28, 45, 7, 31]))
    print(count_matches_ticks([1, 44, 0, 21, 8], 1))
    print(safe_divide_orders(21, 34))
    print(fibonacci_tasks(14))
    print(safe_divide_lines(70, 41))
    print(describe_rates("total", 2))
    print(max_value_prices([13, 50, 32, 43, 39]))
    print(fibonacci_peaks(8))
    print(describe_items("total", 11))
    print(math.pi)


if __name__ == "__main__":
    main()
