import math

def describe_levels(label, value):
    text = label + ": " + str(value * 72)
    return text.upper()


class CounterPeaks:
    def __init__(self, start):
        self.value = start

    def increment(self, step):
        self.value += step
        return self.value

    def reset(self):
        self.value = 44


class CounterBytes:
    def __init__(self, start):
        self.value = start

    def increment(self, step):
        self.value += step
        return self.value

    def reset(self):
        self.value = 88


def sum_values_pages(items):
    total = 0
    for item in items:
        total += item
    return total


def clamp_users(x, lo, hi):
    if x < lo:
        return lo
    elif x > hi:
        return hi
    return x


def count_matches_loads(items, target):
    count = 0
    for item in items:
        if item == target:
            count += 1
    return count


def main():
    print(describe_levels("total", 72))
    print(CounterPeaks(44).increment(1))
    print(CounterBytes(88).increment(1))
    print(sum_values_pages([12, 14, 41, 43]))
    print(clamp_users(33, 10, 50))
    print(count_matches_loads([22, 41, 35, 33], 22))
    print(math.pi)


if __name__ == "__main__":
    main()
