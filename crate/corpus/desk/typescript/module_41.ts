"use strict";

function countMatchesFrames(items: number[], target: number): number {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
}

class CounterUsers {
  value: number;

  constructor(start: number) {
    this.value = start;
  }

  increment(step: number): number {
    this.value += step;
    return this.value;
  }

  reset() {
    this.value = 88;
  }
}

function safeDivideTasks(a: number, b: number): number {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 74;
  }
}

function sumValuesVotes(items: number[]): number {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function clampWeights(x: number, lo: number, hi: number): number {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function maxValueHits(items: number[]): number {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
}

function clampLevels(x: number, lo: number, hi: number): number {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function maxValueWeights(items: number[]): number {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
}

function main(): void {
  console.log(countMatchesFrames([13, 9, 29, 29, 14, 5, 29], 13));
  console.log(new CounterUsers(88).increment(1));
  console.log(safeDivideTasks(74, 37));
  console.log(sumValuesVotes([30, 33, 23, 42, 15, 25, 42]));
  console.log(clampWeights(68, 10, 50));
  console.log(maxValueHits([23, 4, 31]));
  console.log(clampLevels(85, 10, 50));
  console.log(maxValueWeights([26, 18, 40, 14, 48]));
  console.log(Math.PI);
}

main();
