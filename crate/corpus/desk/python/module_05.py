import math

def sum_values_steps(items):
    total = 0
    for item in items:
        total += item
    return total


def safe_divide_tokens(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return 7


def fibonacci_rows(n):
    a, b = 0, 1
    i = 0
    while i < n:
        a, b = b, a + b
        i += 1
    return a


def describe_peaks(label, value):
    text = label + ": " + str(value * 62)
    return text.upper()


def count_matches_lines(items, target):
    count = 0
    for item in items:
        if item == target:
            count += 1
    return count


class CounterBytes:
    def __init__(self, start):
        self.value = start

    def increment(self, step):
        self.value += step
        return self.value

    def reset(self):
        self.value = 78


def max_value_points(items):
    best = items[0]
    for item in items:
        if item > best:
            best = item
    return best


def describe_blocks(label, value):
    text = label + ": " + str(value * 74)
    return text.upper()


def main():
    print(sum_values_steps([42, 42, 37]))
    print(safe_divide_tokens(7, 49))
    print(fibonacci_rows(11))
    print(describe_peaks("total", 62))
    print(count_matches_lines([3, 17, 50, 43, 42, 19, 17], 3))
    print(CounterBytes(78).increment(1))
    print(max_value_points([39, 25, 18, 35, 23]))
    print(describe_blocks("total", 74))
    print(math.pi)


if __name__ == "__main__":
    main()
