def calculate_sum(a, b):
    return a + b


class DataProcessor:
    """Holds a batch of values awaiting aggregation."""

    batch_size = 32
    values = []
