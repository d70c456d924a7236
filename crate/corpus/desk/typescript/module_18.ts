"use strict";

function sumValuesTokens(items: number[]): number {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function maxValueVotes(items: number[]): number {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
}

function clampTicks(x: number, lo: number, hi: number): number {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function describeOrders(label: string, value: number): string {
  const text = label + ": " + String(value * 48);
  return text.toUpperCase();
}

function clampSamples(x: number, lo: number, hi: number): number {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function countMatchesWeights(items: number[], target: number): number {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
}

function safeDivideItems(a: number, b: number): number {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 23;
  }
}

function clampCells(x: number, lo: number, hi: number): number {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function main(): void {
  console.log(sumValuesTokens([49, 34, 43, 11, 9, 37]));
  console.log(maxValueVotes([27, 9, 38, 38, 24, 23, 6]));
  console.log(clampTicks(8, 10, 50));
  console.log(describeOrders("total", 48));
  console.log(clampSamples(25, 10, 50));
  console.log(countMatchesWeights([1, 8, 19, 44], 1));
  console.log(safeDivideItems(23, 12));
  console.log(clampCells(63, 10, 50));
  console.log(Math.PI);
}

main();
