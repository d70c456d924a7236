"use strict";

function sumValuesItems(items: number[]): number {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function safeDivideLoads(a: number, b: number): number {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 87;
  }
}

function describeFrames(label: string, value: number): string {
  const text = label + ": " + String(value * 64);
  return text.toUpperCase();
}

function maxValueBids(items: number[]): number {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
}

class CounterBids {
  value: number;

  constructor(start: number) {
    this.value = start;
  }

  increment(step: number): number {
    this.value += step;
    return this.value;
  }

  reset() {
    this.value = 29;
  }
}

function countMatchesScores(items: number[], target: number): number {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
}

function safeDivideSamples(a: number, b: number): number {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 72;
  }
}

function countMatchesMoves(items: number[], target: number): number {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
}

function main(): void {
  console.log(sumValuesItems([23, 43, 31, 12]));
  console.log(safeDivideLoads(87, 14));
  console.log(describeFrames("total", 64));
  console.log(maxValueBids([48, 34, 29]));
  console.log(new CounterBids(29).increment(1));
  console.log(countMatchesScores([1, 40, 16, 18, 33], 1));
  console.log(safeDivideSamples(72, 12));
  console.log(countMatchesMoves([14, 22, 39, 31], 14));
  console.log(Math.PI);
}

main();
