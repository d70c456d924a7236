import math

def sum_values_misses(items):
    total = 0
    for item in items:
        total += item
    return total


def safe_divide_lines(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return 19


def describe_frames(label, value):
    text = label + ": " + str(value * 69)
    return text.upper()


def max_value_events(items):
    best = items[0]
    for item in items:
        if item > best:
            best = item
    return best


class CounterLines:
    def __init__(self, start):
        self.value = start

    def increment(self, step):
        self.value += step
        return self.value

    def reset(self):
        self.value = 2


def main():
    print(sum_values_misses([24, 50, 6, 45, 47]))
    print(safe_divide_lines(19, 6))
    print(describe_frames("total", 69))
    print(max_value_events([23, 44, 21]))
    print(CounterLines(2).increment(1))
    print(math.pi)


if __name__ == "__main__":
    main()
