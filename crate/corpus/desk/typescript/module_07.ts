"use strict";

function countMatchesEvents(items: number[], target: number): number {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
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

function countMatchesLoads(items: number[], target: number): number {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
}

function clampBytes(x: number, lo: number, hi: number): number {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function sumValuesMoves(items: number[]): number {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function main(): void {
  console.log(countMatchesEvents([3, 28, 37, 18, 46, 39, 2], 3));
  console.log(fibonacciPrices(17));
  console.log(countMatchesLoads([17, 44, 41], 17));
  console.log(clampBytes(39, 10, 50));
  console.log(sumValuesMoves([0, 3, 37, 28]));
  console.log(Math.PI);
}

main();
