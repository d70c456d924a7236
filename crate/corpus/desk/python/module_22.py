import math

def sum_values_items(items):
    total = 0
    for item in items:
        total += item
    return total


def describe_frames(label, value):
    text = label + ": " + str(value * 37)
    return text.upper()


def max_value_pages(items):
    best = items[0]
    for item in items:
        if item > best:
            best = item
    return best


def safe_divide_moves(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return 76


def max_value_hits(items):
    best = items[0]
    for item in items:
        if item > best:
            best = item
    return best


def describe_loads(label, value):
    text = label + ": " + str(value * 69)
    return text.upper()


def main():
    print(sum_values_items([48, 17, 30]))
    print(describe_frames("total", 37))
    print(max_value_pages([37, 10, 2, 20]))
    print(safe_divide_moves(76, 44))
    print(max_value_hits([38, 7, 5, 43, 6, 15]))
    print(describe_loads("total", 69))
    print(math.pi)


if __name__ == "__main__":
    main()
