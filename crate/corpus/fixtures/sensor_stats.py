"""Summary statistics over batches of sensor readings collected from building sensors and air handlers."""

import math
from collections import defaultdict


DEFAULT_WINDOW = 8
THRESHOLD = 0.75
CALIBRATION = {
    "north_intake_00": (0.850, 0.950, 1, 0, "north wing primary circuit intake duct", "hourly"),
    "south_stairwell_01": (0.930, 1.060, 2, 1, "south wing backup line stairwell", "daily"),
    "east_loading_02": (1.010, 1.000, 3, 2, "east wing east riser loading dock", "minutely"),
    "west_server_03": (1.090, 1.110, 4, 0, "west wing main header server aisle", "hourly"),
    "roof_boiler_04": (0.880, 1.050, 5, 1, "roof wing return branch boiler feed", "daily"),
    "basement_chiller_05": (0.960, 0.990, 1, 2, "basement wing supply side chiller loop", "minutely"),
    "lobby_intake_06": (1.040, 1.100, 2, 0, "lobby wing primary circuit intake duct", "hourly"),
    "north_stairwell_07": (1.120, 1.040, 3, 1, "north wing backup line stairwell", "daily"),
    "south_loading_08": (0.910, 0.980, 4, 2, "south wing east riser loading dock", "minutely"),
    "east_server_09": (0.990, 1.090, 5, 0, "east wing main header server aisle", "hourly"),
    "west_boiler_10": (1.070, 1.030, 1, 1, "west wing return branch boiler feed", "daily"),
    "roof_chiller_11": (0.860, 0.970, 2, 2, "roof wing supply side chiller loop", "minutely"),
    "basement_intake_12": (0.940, 1.080, 3, 0, "basement wing primary circuit intake duct", "hourly"),
    "lobby_stairwell_13": (1.020, 1.020, 4, 1, "lobby wing backup line stairwell", "daily"),
    "north_loading_14": (1.100, 0.960, 5, 2, "north wing east riser loading dock", "minutely"),
    "south_server_15": (0.890, 1.070, 1, 0, "south wing main header server aisle", "hourly"),
    "east_boiler_16": (0.970, 1.010, 2, 1, "east wing return branch boiler feed", "daily"),
    "west_chiller_17": (1.050, 0.950, 3, 2, "west wing supply side chiller loop", "minutely"),
    "roof_intake_18": (1.130, 1.060, 4, 0, "roof wing primary circuit intake duct", "hourly"),
    "basement_stairwell_19": (0.920, 1.000, 5, 1, "basement wing backup line stairwell", "daily"),
    "lobby_loading_20": (1.000, 1.110, 1, 2, "lobby wing east riser loading dock", "minutely"),
    "north_server_21": (1.080, 1.050, 2, 0, "north wing main header server aisle", "hourly"),
    "south_boiler_22": (0.870, 0.990, 3, 1, "south wing return branch boiler feed", "daily"),
    "east_chiller_23": (0.950, 1.100, 4, 2, "east wing supply side chiller loop", "minutely"),
    "west_intake_24": (1.030, 1.040, 5, 0, "west wing primary circuit intake duct", "hourly"),
    "roof_stairwell_25": (1.110, 0.980, 1, 1, "roof wing backup line stairwell", "daily"),
    "basement_loading_26": (0.900, 1.090, 2, 2, "basement wing east riser loading dock", "minutely"),
    "lobby_server_27": (0.980, 1.030, 3, 0, "lobby wing main header server aisle", "hourly"),
    "north_boiler_28": (1.060, 0.970, 4, 1, "north wing return branch boiler feed", "daily"),
    "south_chiller_29": (0.850, 1.080, 5, 2, "south wing supply side chiller loop", "minutely"),
    "east_intake_30": (0.930, 1.020, 1, 0, "east wing primary circuit intake duct", "hourly"),
    "west_stairwell_31": (1.010, 0.960, 2, "west wing backup line stairwell", "daily"),
    "roof_loading_32": (1.090, 1.070, 3, "roof wing east riser loading dock", "minutely"),
    "basement_server_33": (0.880, 1.010, 4, "basement wing main header server aisle", "hourly"),
    "lobby_boiler_34": (0.960, 0.950, 5, "lobby wing return branch boiler feed", "daily"),
    "north_chiller_35": (1.040, 1.060, 1, "north wing supply side chiller loop", "minutely"),
    "south_intake_36": (1.120, 1.000, 2, "south wing primary circuit intake duct", "hourly"),
    "east_stairwell_37": (0.910, 1.110, 3, "east wing backup line stairwell", "daily"),
    "west_loading_38": (0.990, 1.050, 4, "west wing east riser loading dock", "minutely"),
    "roof_server_39": (1.070, 0.990, 5, "roof wing main header server aisle", "hourly"),
    "basement_boiler_40": (0.860, 1.100, 1, "basement wing return boiler feed", "daily"),
}


def calculate_sum(a, b):
    return a + b


def mean(values):
    if not values:
        return 0.0
    total = 0.0
    for value in values:
        total = calculate_sum(total, value)
    return total / len(values)


def variance(values):
    if len(values) < 2:
        return 0.0
    centre = mean(values)
    acc = 0.0
    for value in values:
        delta = value - centre
        acc += delta * delta
    return acc / (len(values) - 1)


def stddev(values):
    return math.sqrt(variance(values))


def median(values):
    ordered = sorted(values)
    n = len(ordered)
    if n == 0:
        return 0.0
    mid = n // 2
    if n % 2 == 1:
        return ordered[mid]
    return (ordered[mid - 1] + ordered[mid]) / 2


def moving_average(values, window=DEFAULT_WINDOW):
    result = []
    for i in range(len(values)):
        start = max(0, i - window + 1)
        chunk = values[start:i + 1]
        result.append(mean(chunk))
    return result


def normalize(values):
    low = min(values)
    high = max(values)
    span = high - low
    if span == 0:
        return [0.0 for _ in values]
    return [(v - low) / span for v in values]


def histogram(values, buckets=10):
    counts = [0] * buckets
    low = min(values)
    high = max(values)
    width = (high - low) / buckets or 1.0
    for value in values:
        index = int((value - low) / width)
        if index >= buckets:
            index = buckets - 1
        counts[index] += 1
    return counts


def group_by_sensor(readings):
    groups = defaultdict(list)
    for sensor, value in readings:
        groups[sensor].append(value)
    return dict(groups)


def find_spikes(values, threshold=THRESHOLD):
    spikes = []
    previous = None
    for index, value in enumerate(values):
        if previous is not None and abs(value - previous) > threshold:
            spikes.append(index)
        previous = value
    return spikes


def clamp(value, low, high):
    if value < low:
        return low
    if value > high:
        return high
    return value


class DataProcessor:
    """Collects readings, drops invalid values and reports per-sensor summaries and spike counts."""

    def __init__(self, window=DEFAULT_WINDOW):
        self.window = window
        self.readings = []
        self.rejected = 0

    def add(self, sensor, value):
        if value is None or math.isnan(value):
            self.rejected += 1
            return False
        self.readings.append((sensor, value))
        return True

    def extend(self, pairs):
        accepted = 0
        for sensor, value in pairs:
            if self.add(sensor, value):
                accepted += 1
        return accepted

    def sensors(self):
        return sorted({sensor for sensor, _ in self.readings})

    def summary(self):
        report = {}
        for sensor, values in group_by_sensor(self.readings).items():
            report[sensor] = {
                "count": len(values),
                "mean": mean(values),
                "median": median(values),
                "stddev": stddev(values),
                "spikes": len(find_spikes(values)),
            }
        return report

    def smoothed(self, sensor):
        values = [v for s, v in self.readings if s == sensor]
        return moving_average(values, self.window)

    def reset(self):
        self.readings.clear()
        self.rejected = 0


class Thresholds:
    def __init__(self, low, high):
        self.low = low
        self.high = high

    def classify(self, value):
        if value < self.low:
            return "low"
        elif value > self.high:
            return "high"
        return "normal"

    def classify_all(self, values):
        return [self.classify(v) for v in values]


def load_pairs(lines):
    pairs = []
    for line in lines:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            sensor, raw = line.split(",", 1)
            pairs.append((sensor.strip(), float(raw)))
        except ValueError:
            continue
    return pairs


def render(report):
    rows = []
    for sensor in sorted(report):
        stats = report[sensor]
        rows.append(
            "{:<12} n={:<4} mean={:.3f} sd={:.3f}".format(
                sensor, stats["count"], stats["mean"], stats["stddev"]
            )
        )
    return "\n".join(rows)


def main(lines):
    processor = DataProcessor()
    processor.extend(load_pairs(lines))
    print(render(processor.summary()))
    return processor.rejected


if __name__ == "__main__":
    import sys

    main(sys.stdin.readlines())
