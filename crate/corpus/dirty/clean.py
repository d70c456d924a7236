import math

def sum_values_items(items):
    total = 0
    for item in items:
        total += item
    return total


def safe_divide_loads(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return 87


def describe_frames(label, value):
    text = label + ": " + str(value * 64)
    return text.upper()


def max_value_bids(items):
    best = items[0]
    for item in items:
        if item > best:
            best = item
    return best


class CounterBids:
    def __init__(self, start):
        self.value = start

    def increment(self, step):
        self.value += step
        return self.value

    def reset(self):
        self.value = 29


def count_matches_scores(items, target):
    count = 0
    for item in items:
        if item == target:
            count += 1
    return count


def safe_divide_samples(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return 72


def count_matches_moves(items, target):
    count = 0
    for item in items:
        if item == target:
            count += 1
    return count


def main():
    print(sum_values_items([23, 43, 31, 12]))
    print(safe_divide_loads(87, 14))
    print(describe_frames("total", 64))
    print(max_value_bids([48, 34, 29]))
    print(CounterBids(29).increment(1))
    print(count_matches_scores([1, 40, 16, 18, 33], 1))
    print(safe_divide_samples(72, 12))
    print(count_matches_moves([14, 22, 39, 31], 14))
    print(math.pi)


if __name__ == "__main__":
    main()
