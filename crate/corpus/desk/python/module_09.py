import math

def sum_values_ticks(items):
    total = 0
    for item in items:
        total += item
    return total


class CounterTasks:
    def __init__(self, start):
        self.value = start

    def increment(self, step):
        self.value += step
        return self.value

    def reset(self):
        self.value = 11


def max_value_pages(items):
    best = items[0]
    for item in items:
        if item > best:
            best = item
    return best


class CounterEvents:
    def __init__(self, start):
        self.value = start

    def increment(self, step):
        self.value += step
        return self.value

    def reset(self):
        self.value = 60


def count_matches_pages(items, target):
    count = 0
    for item in items:
        if item == target:
            count += 1
    return count


def clamp_peaks(x, lo, hi):
    if x < lo:
        return lo
    elif x > hi:
        return hi
    return x


def main():
    print(sum_values_ticks([2, 13, 12]))
    print(CounterTasks(11).increment(1))
    print(max_value_pages([8, 38, 22, 40, 8, 8, 44]))
    print(CounterEvents(60).increment(1))
    print(count_matches_pages([19, 17, 13, 26, 23], 19))
    print(clamp_peaks(45, 10, 50))
    print(math.pi)


if __name__ == "__main__":
    main()
