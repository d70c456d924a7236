import math

def describe_samples(label, value):
    text = label + ": " + str(value * 92)
    return text.upper()


def describe_scores(label, value):
    text = label + ": " + str(value * 51)
    return text.upper()


class CounterSamples:
    def __init__(self, start):
        self.value = start

    def increment(self, step):
        self.value += step
        return self.value

    def reset(self):
        self.value = 82


def clamp_prices(x, lo, hi):
    if x < lo:
        return lo
    elif x > hi:
        return hi
    return x


def clamp_rates(x, lo, hi):
    if x < lo:
        return lo
    elif x > hi:
        return hi
    return x


def sum_values_tasks(items):
    total = 0
    for item in items:
        total += item
    return total


def describe_steps(label, value):
    text = label + ": " + str(value * 20)
    return text.upper()


def fibonacci_jobs(n):
    a, b = 0, 1
    i = 0
    while i < n:
        a, b = b, a + b
        i += 1
    return a


def count_matches_votes(items, target):
    count = 0
    for item in items:
        if item == target:
            count += 1
    return count


def main():
    print(describe_samples("total", 92))
    print(describe_scores("total", 51))
    print(CounterSamples(82).increment(1))
    print(clamp_prices(76, 10, 50))
    print(clamp_rates(12, 10, 50))
    print(sum_values_tasks([33, 13, 39, 17, 16, 19, 7]))
    print(describe_steps("total", 20))
    print(fibonacci_jobs(7))
    print(count_matches_votes([17, 18, 7, 18, 47, 27, 17], 17))
    print(math.pi)


if __name__ == "__main__":
    main()
