import math

class CounterSamples:
    def __init__(self, start):
        self.value = start

    def increment(self, step):
        self.value += step
        return self.value

    def reset(self):
        self.value = 11


def max_value_moves(items):
    best = items[0]
    for item in items:
        if item > best:
            best = item
    return best


def describe_levels(label, value):
    text = label + ": " + str(value * 97)
    return text.upper()


def describe_events(label, value):
    text = label + ": " + str(value * 23)
    return text.upper()


def clamp_peaks(x, lo, hi):
    if x < lo:
        return lo
    elif x > hi:
        return hi
    return x


def count_matches_orders(items, target):
    count = 0
    for item in items:
        if item == target:
            count += 1
    return count


def sum_values_moves(items):
    total = 0
    for item in items:
        total += item
    return total


def count_matches_items(items, target):
    count = 0
    for item in items:
        if item == target:
            count += 1
    return count


def main():
    print(CounterSamples(11).increment(1))
    print(max_value_moves([26, 25, 12, 14]))
    print(describe_levels("total", 97))
    print(describe_events("total", 23))
    print(clamp_peaks(84, 10, 50))
    print(count_matches_orders([28, 12, 22, 9, 35], 28))
    print(sum_values_moves([49, 28, 37, 14, 26, 44, 11]))
    print(count_matches_items([32, 3, 22, 6], 32))
    print(math.pi)


if __name__ == "__main__":
    main()
