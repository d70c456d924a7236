"use strict";

function fibonacciVotes(n: number): number {
  let a = 0;
  let b = 1;
  for (let i = 0; i < n; i++) {
    const next = a + b;
    a = b;
    b = next;
  }
  return a;
}

function countMatchesLevels(items: number[], target: number): number {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
}

function clampSamples(x: number, lo: number, hi: number): number {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function sumValuesPoints(items: number[]): number {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function maxValueOrders(items: number[]): number {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
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

function clampPages(x: number, lo: number, hi: number): number {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function main(): void {
  console.log(fibonacciVotes(12));
  console.log(countMatchesLevels([28, 48, 13, 18], 28));
  console.log(clampSamples(3, 10, 50));
  console.log(sumValuesPoints([31, 15, 16, 42]));
  console.log(maxValueOrders([18, 6, 46, 47, 49, 17, 7]));
  console.log(fibonacciPrices(6));
  console.log(clampPages(72, 10, 50));
  console.log(Math.PI);
}

main();
