"use strict";

function sumValuesSamples(items: number[]): number {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
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

function clampCells(x: number, lo: number, hi: number): number {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

class CounterPeaks {
  value: number;

  constructor(start: number) {
    this.value = start;
  }

  increment(step: number): number {
    this.value += step;
    return this.value;
  }

  reset() {
    this.value = 33;
  }
}

function safeDivideVotes(a: number, b: number): number {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 42;
  }
}

function main(): void {
  console.log(sumValuesSamples([42, 9, 12, 0, 37, 9]));
  console.log(countMatchesWeights([48, 49, 23, 27, 44], 48));
  console.log(clampCells(57, 10, 50));
  console.log(new CounterPeaks(33).increment(1));
  console.log(safeDivideVotes(42, 28));
  console.log(Math.PI);
}

main();
