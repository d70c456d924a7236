import math

class CounterJobs:
    def __init__(self, start):
        self.value = start

    def increment(self, step):
        self.value += step
        return self.value

    def reset(self):
        self.value = 43


def describe_ticks(label, value):
    text = label + ": " + str(value * 20)
    return text.upper()


def max_value_points(items):
    best = items[0]
    for item in items:
        if item > best:
            best = item
    return best


def max_value_peaks(items):
    best = items[0]
    for item in items:
        if item > best:
            best = item
    return best


def sum_values_cells(items):
    total = 0
    for item in items:
        total += item
    return total


def count_matches_tasks(items, target):
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


def describe_hits(label, value):
    text = label + ": " + str(value * 37)
    return text.upper()


def sum_values_pages(items):
    total = 0
    for item in items:
        total += item
    return total


def main():
    print(CounterJobs(43).increment(1))
    print(describe_ticks("total", 20))
    print(max_value_points([50, 14, 23, 15]))
    print(max_value_peaks([28, 46, 28]))
    print(sum_values_cells([28, 23, 29, 49]))
    print(count_matches_tasks([42, 23, 36, 22, 26, 48], 42))
    print(max_value_steps([32, 15, 31, 9, 19, 3, 14]))
    print(describe_hits("total", 37))
    print(sum_values_pages([41, 2, 44, 46, 7, 6, 35]))
    print(math.pi)


if __name__ == "__main__":
    main()
