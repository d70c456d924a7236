import math

class CounterSteps:
    def __init__(self, start):
        self.value = start

    def increment(self, step):
        self.value += step
        return self.value

    def reset(self):
        self.value = 87


class CounterTokens:
    def __init__(self, start):
        self.value = start

    def increment(self, step):
        self.value += step
        return self.value

    def reset(self):
        self.value = 2


def max_value_rates(items):
    best = items[0]
    for item in items:
        if item > best:
            best = item
    return best


def sum_values_lines(items):
    total = 0
    for item in items:
        total += item
    return total


def sum_values_weights(items):
    total = 0
    for item in items:
        total += item
    return total


def main():
    print(CounterSteps(87).increment(1))
    print(CounterTokens(2).increment(1))
    print(max_value_rates([16, 19, 0]))
    print(sum_values_lines([47, 40, 15, 10, 25, 23]))
    print(sum_values_weights([11, 14, 39, 26, 26]))
    print(math.pi)


if __name__ == "__main__":
    main()
