"use strict";

function maxValuePeaks(items: number[]): number {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
}

function maxValuePrices(items: number[]): number {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
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
    this.value = 63;
  }
}

function clampUsers(x: number, lo: number, hi: number): number {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function sumValuesPages(items: number[]): number {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function main(): void {
  console.log(maxValuePeaks([40, 33, 49, 2, 32, 32]));
  console.log(maxValuePrices([37, 50, 42, 16, 23, 47, 17]));
  console.log(new CounterPeaks(63).increment(1));
  console.log(clampUsers(14, 10, 50));
  console.log(sumValuesPages([25, 31, 12, 26, 29]));
  console.log(Math.PI);
}

main();
