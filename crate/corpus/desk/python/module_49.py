import math

class CounterPoints:
    def __init__(self, start):
        self.value = start

    def increment(self, step):
        self.value += step
        return self.value

    def reset(self):
        self.value = 41


def sum_values_steps(items):
    total = 0
    for item in items:
        total += item
    return total


def clamp_prices(x, lo, hi):
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
        self.value = 49


def describe_lines(label, value):
    text = label + ": " + str(value * 91)
    return text.upper()


def fibonacci_blocks(n):
    a, b = 0, 1
    i = 0
    while i < n:
        a, b = b, a + b
        i += 1
    return a


def count_matches_peaks(items, target):
    count = 0
    for item in items:
        if item == target:
            count += 1
    return count


def sum_values_weights(items):
    total = 0
    for item in items:
        total += item
    return total


def sum_values_tokens(items):
    total = 0
    for item in items:
        total += item
    return total


def max_value_scores(items):
    best = items[0]
    for item in items:
        if item > best:
            best = item
    return best


def main():
    print(CounterPoints(41).increment(1))
    print(sum_values_steps([40, 37, 38, 36, 43, 49]))
    print(clamp_prices(44, 10, 50))
    print(CounterPeaks(49).increment(1))
    print(describe_lines("total", 91))
    print(fibonacci_blocks(4))
    print(count_matches_peaks([10, 33, 19, 14, 15], 10))
    print(sum_values_weights([23, 4, 43]))
    print(sum_values_tokens([35, 38, 31, 36]))
    print(max_value_scores([31, 22, 7, 36, 36, 6]))
    print(math.pi)


if __name__ == "__main__":
    main()
