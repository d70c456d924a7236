import math

def sum_values_users(items):
    total = 0
    for item in items:
        total += item
    return total


def clamp_cells(x, lo, hi):
    if x < lo:
        return lo
    elif x > hi:
        return hi
    return x


def max_value_steps(items):
    best = items[0]
    for item in items:
        if item > best:
            best = item
    return best


def clamp_tokens(x, lo, hi):
    if x < lo:
        return lo
    elif x > hi:
        return hi
    return x


class CounterTokens:
    def __init__(self, start):
        self.value = start

    def increment(self, step):
        self.value += step
        return self.value

    def reset(self):
        self.value = 69


def main():
    print(sum_values_users([50, 18, 24, 24]))
    print(clamp_cells(35, 10, 50))
    print(max_value_steps([11, 28, 18]))
    print(clamp_tokens(62, 10, 50))
    print(CounterTokens(69).increment(1))
    print(math.pi)


if __name__ == "__main__":
    main()
