"use strict";

function sumValuesMisses(items: number[]): number {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function clampOrders(x: number, lo: number, hi: number): number {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function countMatchesSamples(items: number[], target: number): number {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
}

function countMatchesPages(items: number[], target: number): number {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
}

function fibonacciScores(n: number): number {
  let a = 0;
  let b = 1;
  for (let i = 0; i < n; i++) {
    const next = a + b;
    a = b;
    b = next;
  }
  return a;
}

class CounterLevels {
  value: number;

  constructor(start: number) {
    this.value = start;
  }

  increment(step: number): number {
    this.value += step;
    return this.value;
  }

  reset() {
    this.value = 78;
  }
}

function countMatchesTokens(items: number[], target: number): number {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
}

function maxValueScores(items: number[]): number {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
}

function safeDividePrices(a: number, b: number): number {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 28;
  }
}

function main(): void {
  console.log(sumValuesMisses([14, 50, 2, 26]));
  console.log(clampOrders(74, 10, 50));
  console.log(countMatchesSamples([5, 33, 37, 41, 44], 5));
  console.log(countMatchesPages([44, 4, 6, 27, 45], 44));
  console.log(fibonacciScores(4));
  console.log(new CounterLevels(78).increment(1));
  console.log(countMatchesTokens([5, 48, 27], 5));
  console.log(maxValueScores([31, 17, 1]));
  console.log(safeDividePrices(28, 45));
  console.log(Math.PI);
}

main();
