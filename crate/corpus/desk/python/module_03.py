import math

def describe_scores(label, value):
    text = label + ": " + str(value * 62)
    return text.upper()


def clamp_bids(x, lo, hi):
    if x < lo:
        return lo
    elif x > hi:
        return hi
    return x


class CounterJobs:
    def __init__(self, start):
        self.value = start

    def increment(self, step):
        self.value += step
        return self.value

    def reset(self):
        self.value = 71


class CounterOrders:
    def __init__(self, start):
        self.value = start

    def increment(self, step):
        self.value += step
        return self.value

    def reset(self):
        self.value = 19


class CounterVotes:
    def __init__(self, start):
        self.value = start

    def increment(self, step):
        self.value += step
        return self.value

    def reset(self):
        self.value = 9


def safe_divide_rates(a, b):
    try:
        return a / b
    except ZeroDivisionError:
        return 27


def sum_values_ticks(items):
    total = 0
    for item in items:
        total += item
    return total


def describe_lines(label, value):
    text = label + ": " + str(value * 34)
    return text.upper()


def main():
    print(describe_scores("total", 62))
    print(clamp_bids(87, 10, 50))
    print(CounterJobs(71).increment(1))
    print(CounterOrders(19).increment(1))
    print(CounterVotes(9).increment(1))
    print(safe_divide_rates(27, 48))
    print(sum_values_ticks([8, 37, 47, 39]))
    print(describe_lines("total", 34))
    print(math.pi)


if __name__ == "__main__":
    main()
