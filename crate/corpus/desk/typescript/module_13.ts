"use strict";

function fibonacciOrders(n: number): number {
  let a = 0;
  let b = 1;
  for (let i = 0; i < n; i++) {
    const next = a + b;
    a = b;
    b = next;
  }
  return a;
}

function countMatchesScores(items: number[], target: number): number {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
}

function sumValuesVotes(items: number[]): number {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function safeDividePoints(a: number, b: number): number {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 87;
  }
}

function sumValuesRates(items: number[]): number {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function safeDivideLoads(a: number, b: number): number {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 39;
  }
}

function clampMisses(x: number, lo: number, hi: number): number {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function fibonacciRows(n: number): number {
  let a = 0;
  let b = 1;
  for (let i = 0; i < n; i++) {
    const next = a + b;
    a = b;
    b = next;
  }
  return a;
}

function main(): void {
  console.log(fibonacciOrders(3));
  console.log(countMatchesScores([18, 47, 48, 43, 10], 18));
  console.log(sumValuesVotes([40, 43, 47, 50, 12]));
  console.log(safeDividePoints(87, 25));
  console.log(sumValuesRates([32, 45, 11, 4, 44, 40]));
  console.log(safeDivideLoads(39, 18));
  console.log(clampMisses(87, 10, 50));
  console.log(fibonacciRows(14));
  console.log(Math.PI);
}

main();
