"use strict";

function sumValuesRows(items: number[]): number {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function clampTasks(x: number, lo: number, hi: number): number {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function fibonacciJobs(n: number): number {
  let a = 0;
  let b = 1;
  for (let i = 0; i < n; i++) {
    const next = a + b;
    a = b;
    b = next;
  }
  return a;
}

function sumValuesPages(items: number[]): number {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function safeDividePeaks(a: number, b: number): number {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 71;
  }
}

function safeDivideTicks(a: number, b: number): number {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 70;
  }
}

function countMatchesLines(items: number[], target: number): number {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
}

class CounterTasks {
  value: number;

  constructor(start: number) {
    this.value = start;
  }

  increment(step: number): number {
    this.value += step;
    return this.value;
  }

  reset() {
    this.value = 58;
  }
}

class CounterRates {
  value: number;

  constructor(start: number) {
    this.value = start;
  }

  increment(step: number): number {
    this.value += step;
    return this.value;
  }

  reset() {
    this.value = 94;
  }
}

function main(): void {
  console.log(sumValuesRows([37, 30, 6, 0, 13, 48]));
  console.log(clampTasks(94, 10, 50));
  console.log(fibonacciJobs(4));
  console.log(sumValuesPages([22, 32, 27, 5, 2, 21]));
  console.log(safeDividePeaks(71, 11));
  console.log(safeDivideTicks(70, 14));
  console.log(countMatchesLines([31, 13, 3], 31));
  console.log(new CounterTasks(58).increment(1));
  console.log(new CounterRates(94).increment(1));
  console.log(Math.PI);
}

main();
