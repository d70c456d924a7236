import math

def count_matches_frames(items, target):
    count = 0
    for item in items:
        if item == target:
            count += 1
    return count


class CounterUsers:
    def __init__(self, start):
        self.value = start

    def increment(self, step):
        self.value += step
        return self.value

    def reset(self):
        self.value = 88


def safe_divide_tasks(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return 74


def sum_values_votes(items):
    total = 0
    for item in items:
        total += item
    return total


def clamp_weights(x, lo, hi):
    if x < lo:
        return lo
    elif x > hi:
        return hi
    return x


def max_value_hits(items):
    best = items[0]
    for item in items:
        if item > best:
            best = item
    return best


def clamp_levels(x, lo, hi):
    if x < lo:
        return lo
    elif x > hi:
        return hi
    return x


def max_value_weights(items):
    best = items[0]
    for item in items:
        if item > best:
            best = item
    return best


def main():
    print(count_matches_frames([13, 9, 29, 29, 14, 5, 29], 13))
    print(CounterUsers(88).increment(1))
    print(safe_divide_tasks(74, 37))
    print(sum_values_votes([30, 33, 23, 42, 15, 25, 42]))
    print(clamp_weights(68, 10, 50))
    print(max_value_hits([23, 4, 31]))
    print(clamp_levels(85, 10, 50))
    print(max_value_weights([26, 18, 40, 14, 48]))
    print(math.pi)


if __name__ == "__main__":
    main()
