import math

def sum_values_samples(items):
    total = 0
    for item in items:
        total += item
    return total


def clamp_lines(x, lo, hi):
    if x < lo:
        return lo
    elif x > hi:
        return hi
    return x


class CounterSamples:
    def __init__(self, start):
        self.value = start

    def increment(self, step):
        self.value += step
        return self.value

    def reset(self):
        self.value = 96


def sum_values_cells(items):
    total = 0
    for item in items:
        total += item
    return total


def clamp_tokens(x, lo, hi):
    if x < lo:
        return lo
    elif x > hi:
        return hi
    return x


def describe_samples(label, value):
    text = label + ": " + str(value * 54)
    return text.upper()


def sum_values_users(items):
    total = 0
    for item in items:
        total += item
    return total


def main():
    print(sum_values_samples([48, 19, 40, 9, 37, 4, 25]))
    print(clamp_lines(5, 10, 50))
    print(CounterSamples(96).increment(1))
    print(sum_values_cells([39, 24, 0]))
    print(clamp_tokens(59, 10, 50))
    print(describe_samples("total", 54))
    print(sum_values_users([6, 12, 37, 4, 33, 24]))
    print(math.pi)


if __name__ == "__main__":
    main()
