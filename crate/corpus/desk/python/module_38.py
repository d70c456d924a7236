import math

def sum_values_hits(items):
    total = 0
    for item in items:
        total += item
    return total


def fibonacci_users(n):
    a, b = 0, 1
    i = 0
    while i < n:
        a, b = b, a + b
        i += 1
    return a


def count_matches_events(items, target):
    count = 0
    for item in items:
        if item == target:
            count += 1
    return count


def max_value_weights(items):
    best = items[0]
    for item in items:
        if item > best:
            best = item
    return best


def describe_bids(label, value):
    text = label + ": " + str(value * 43)
    return text.upper()


def main():
    print(sum_values_hits([46, 29, 48, 9, 2, 2]))
    print(fibonacci_users(18))
    print(count_matches_events([22, 25, 47, 30, 20, 4], 22))
    print(max_value_weights([14, 11, 41, 14, 15, 28]))
    print(describe_bids("total", 43))
    print(math.pi)


if __name__ == "__main__":
    main()
