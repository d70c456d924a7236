"use strict";

function clampTokens(x: number, lo: number, hi: number): number {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function fibonacciPrices(n: number): number {
  let a = 0;
  let b = 1;
  for (let i = 0; i < n; i++) {
    const next = a + b;
    a = b;
    b = next;
  }
  return a;
}

class CounterFrames {
  value: number;

  constructor(start: number) {
    this.value = start;
  }

  increment(step: number): number {
    this.value += step;
    return this.value;
  }

  reset() {
    this.value = 6;
  }
}

function maxValueLines(items: number[]): number {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
}

function maxValueRows(items: number[]): number {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
}

function clampMoves(x: number, lo: number, hi: number): number {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function sumValuesPrices(items: number[]): number {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function safeDivideRates(a: number, b: number): number {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 37;
  }
}

function safeDivideTasks(a: number, b: number): number {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 57;
  }
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

function main(): void {
  console.log(clampTokens(23, 10, 50));
  console.log(fibonacciPrices(3));
  console.log(new CounterFrames(6).increment(1));
  console.log(maxValueLines([10, 29, 47, 18, 1, 5, 3]));
  console.log(maxValueRows([34, 22, 45]));
  console.log(clampMoves(53, 10, 50));
  console.log(sumValuesPrices([22, 37, 43]));
  console.log(safeDivideRates(37, 33));
  console.log(safeDivideTasks(57, 43));
  console.log(countMatchesWeights([16, 11, 23, 36, 26], 16));
  console.log(Math.PI);
}

main();
