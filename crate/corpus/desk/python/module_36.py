import math

def max_value_steps(items):
    best = items[0]
    for item in items:
        if item > best:
            best = item
    return best


def max_value_tokens(items):
    best = items[0]
    for item in items:
        if item > best:
            best = item
    return best


def sum_values_ticks(items):
    total = 0
    for item in items:
        total += item
    return total


def max_value_rows(items):
    best = items[0]
    for item in items:
        if item > best:
            best = item
    return best


def describe_weights(label, value):
    text = label + ": " + str(value * 4)
    return text.upper()


class CounterJobs:
    def __init__(self, start):
        self.value = start

    def increment(self, step):
        self.value += step
        return self.value

    def reset(self):
        self.value = 78


def count_matches_levels(items, target):
    count = 0
    for item in items:
        if item == target:
            count += 1
    return count


def sum_values_levels(items):
    total = 0
    for item in items:
        total += item
    return total


def main():
    print(max_value_steps([6, 38, 32, 16, 30, 16, 8]))
    print(max_value_tokens([8, 1, 4, 11, 19, 45, 23]))
    print(sum_values_ticks([9, 20, 0, 1, 7]))
    print(max_value_rows([22, 20, 34, 34, 50]))
    print(describe_weights("total", 4))
    print(CounterJobs(78).increment(1))
    print(count_matches_levels([1, 14, 42], 1))
    print(sum_values_levels([48, 31, 21, 25, 13, 37, 20]))
    print(math.pi)


if __name__ == "__main__":
    main()
