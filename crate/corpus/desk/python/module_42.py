import math

def count_matches_votes(items, target):
    count = 0
    for item in items:
        if item == target:
            count += 1
    return count


def describe_events(label, value):
    text = label + ": " + str(value * 23)
    return text.upper()


def sum_values_bytes(items):
    total = 0
    for item in items:
        total += item
    return total


def describe_points(label, value):
    text = label + ": " + str(value * 20)
    return text.upper()


def fibonacci_votes(n):
    a, b = 0, 1
    i = 0
    while i < n:
        a, b = b, a + b
        i += 1
    return a


class CounterBytes:
    def __init__(self, start):
        self.value = start

    def increment(self, step):
        self.value += step
        return self.value

    def reset(self):
        self.value = 5


def main():
    print(count_matches_votes([30, 30, 10, 20], 30))
    print(describe_events("total", 23))
    print(sum_values_bytes([30, 33, 13, 48, 13, 13, 28]))
    print(describe_points("total", 20))
    print(fibonacci_votes(10))
    print(CounterBytes(5).increment(1))
    print(math.pi)


if __name__ == "__main__":
    main()
