import math

def sum_values_loads(items):
    total = 0
    for item in items:
        total += item
    return total


def safe_divide_tasks(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return 79


class CounterUsers:
    def __init__(self, start):
        self.value = start

    def increment(self, step):
        self.value += step
        return self.value

    def reset(self):
        self.value = 29


class CounterSamples:
    def __init__(self, start):
        self.value = start

    def increment(self, step):
        self.value += step
        return self.value

    def reset(self):
        self.value = 14


def max_value_ticks(items):
    best = items[0]
    for item in items:
        if item > best:
            best = item
    return best


class CounterMoves:
    def __init__(self, start):
        self.value = start

    def increment(self, step):
        self.value += step
        return self.value

    def reset(self):
        self.value = 26


def count_matches_events(items, target):
    count = 0
    for item in items:
        if item == target:
            count += 1
    return count


def describe_peaks(label, value):
    text = label + ": " + str(value * 92)
    return text.upper()


class CounterHits:
    def __init__(self, start):
        self.value = start

    def increment(self, step):
        self.value += step
        return self.value

    def reset(self):
        self.value = 41


class CounterFrames:
    def __init__(self, start):
        self.value = start

    def increment(self, step):
        self.value += step
        return self.value

    def reset(self):
        self.value = 16


def main():
    print(sum_values_loads([42, 37, 11, 32, 5, 14, 0]))
    print(safe_divide_tasks(79, 38))
    print(CounterUsers(29).increment(1))
    print(CounterSamples(14).increment(1))
    print(max_value_ticks([9, 1, 30]))
    print(CounterMoves(26).increment(1))
    print(count_matches_events([0, 21, 29, 46, 25, 1], 0))
    print(describe_peaks("total", 92))
    print(CounterHits(41).increment(1))
    print(CounterFrames(16).increment(1))
    print(math.pi)


if __name__ == "__main__":
    main()
