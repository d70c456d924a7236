import math

def safe_divide_orders(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return 16


def fibonacci_scores(n):
    a, b = 0, 1
    i = 0
    while i < n:
        a, b = b, a + b
        i += 1
    return a


def clamp_weights(x, lo, hi):
    if x < lo:
        return lo
    elif x > hi:
        return hi
    return x


class CounterPoints:
    def __init__(self, start):
        self.value = start

    def increment(self, step):
        self.value += step
        return self.value

    def reset(self):
        self.value = 45


def describe_blocks(label, value):
    text = label + ": " + str(value * 60)
    return text.upper()


def safe_divide_jobs(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return 97


def clamp_rows(x, lo, hi):
    if x < lo:
        return lo
    elif x > hi:
        return hi
    return x


def sum_values_steps(items):
    total = 0
    for item in items:
        total += item
    return total


def main():
    print(safe_divide_orders(16, 13))
    print(fibonacci_scores(9))
    print(clamp_weights(47, 10, 50))
    print(CounterPoints(45).increment(1))
    print(describe_blocks("total", 60))
    print(safe_divide_jobs(97, 27))
    print(clamp_rows(19, 10, 50))
    print(sum_values_steps([6, 46, 25]))
    print(math.pi)


if __name__ == "__main__":
    main()
