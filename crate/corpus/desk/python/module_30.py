import math

def sum_values_samples(items):
    total = 0
    for item in items:
        total += item
    return total


def count_matches_weights(items, target):
    count = 0
    for item in items:
        if item == target:
            count += 1
    return count


def clamp_cells(x, lo, hi):
    if x < lo:
        return lo
    elif x > hi:
        return hi
    return x


class CounterPeaks:
    def __init__(self, start):
        self.value = start

    def increment(self, step):
        self.value += step
        return self.value

    def reset(self):
        self.value = 33


def safe_divide_votes(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return 42


def main():
    print(sum_values_samples([42, 9, 12, 0, 37, 9]))
    print(count_matches_weights([48, 49, 23, 27, 44], 48))
    print(clamp_cells(57, 10, 50))
    print(CounterPeaks(33).increment(1))
    print(safe_divide_votes(42, 28))
    print(math.pi)


if __name__ == "__main__":
    main()
