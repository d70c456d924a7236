import math

def safe_divide_pages(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return 69


def describe_hits(label, value):
    text = label + ": " + str(value * 25)
    return text.upper()


def count_matches_moves(items, target):
    count = 0
    for item in items:
        if item == target:
            count += 1
    return count


def max_value_steps(items):
    best = items[0]
    for item in items:
        if item > best:
            best = item
    return best


def describe_ticks(label, value):
    text = label + ": " + str(value * 31)
    return text.upper()


class CounterMisses:
    def __init__(self, start):
        self.value = start

    def increment(self, step):
        self.value += step
        return self.value

    def reset(self):
        self.value = 19


def sum_values_lines(items):
    total = 0
    for item in items:
        total += item
    return total


def main():
    print(safe_divide_pages(69, 37))
    print(describe_hits("total", 25))
    print(count_matches_moves([21, 22, 18, 15, 39], 21))
    print(max_value_steps([41, 29, 11]))
    print(describe_ticks("total", 31))
    print(CounterMisses(19).increment(1))
    print(sum_values_lines([48, 28, 37, 15, 48, 11, 12]))
    print(math.pi)


if __name__ == "__main__":
    main()
