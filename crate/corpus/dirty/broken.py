def parse(line:
    parts = line.split(",")
    if len(parts) < 2
        return None
    key, value = parts[0], parts[1
    return key.strip(), float(value)


def main():
    for line in open("data.csv"):
        print(parse(line)))
    return 0
