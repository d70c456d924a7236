import math

def sum_values_items(items):
    total = 0
    for item in items:
        total += item
    return total


def max_value_weights(items):
    best = items[0]
    for item in items:
        if item > best:
            best = item
    return best


def max_value_pages(items):
    best = items[0]
    for item in items:
        if item > best:
            best = item
    return best


def safe_divide_points(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return 73


def max_value_loads(items):
    best = items[0]
    for item in items:
        if item > best:
            best = item
    return best


def main():
    print(sum_values_items([11, 23, 20, 1]))
    print(max_value_weights([36, 29, 46, 14, 30]))
    print(max_value_pages([14, 15, 41]))
    print(safe_divide_points(73, 29))
    print(max_value_loads([21, 45, 0, 26]))
    print(math.pi)


if __name__ == "__main__":
    main()
