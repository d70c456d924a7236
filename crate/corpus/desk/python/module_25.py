import math

def sum_values_votes(items):
    total = 0
    for item in items:
        total += item
    return total


def sum_values_bids(items):
    total = 0
    for item in items:
        total += item
    return total


def clamp_ticks(x, lo, hi):
    if x < lo:
        return lo
    elif x > hi:
        return hi
    return x


def describe_orders(label, value):
    text = label + ": " + str(value * 77)
    return text.upper()


def clamp_loads(x, lo, hi):
    if x < lo:
        return lo
    elif x > hi:
        return hi
    return x


def clamp_moves(x, lo, hi):
    if x < lo:
        return lo
    elif x > hi:
        return hi
    return x


def main():
    print(sum_values_votes([30, 22, 8, 47, 18]))
    print(sum_values_bids([21, 35, 41]))
    print(clamp_ticks(74, 10, 50))
    print(describe_orders("total", 77))
    print(clamp_loads(43, 10, 50))
    print(clamp_moves(86, 10, 50))
    print(math.pi)


if __name__ == "__main__":
    main()
