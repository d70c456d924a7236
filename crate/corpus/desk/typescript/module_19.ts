"use strict";

function sumValuesUsers(items: number[]): number {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function clampCells(x: number, lo: number, hi: number): number {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function maxValueSteps(items: number[]): number {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
}

function clampTokens(x: number, lo: number, hi: number): number {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

class CounterTokens {
  value: number;

  constructor(start: number) {
    this.value = start;
  }

  increment(step: number): number {
    this.value += step;
    return this.value;
  }

  reset() {
    this.value = 69;
  }
}

function main(): void {
  console.log(sumValuesUsers([50, 18, 24, 24]));
  console.log(clampCells(35, 10, 50));
  console.log(maxValueSteps([11, 28, 18]));
  console.log(clampTokens(62, 10, 50));
  console.log(new CounterTokens(69).increment(1));
  console.log(Math.PI);
}

main();
