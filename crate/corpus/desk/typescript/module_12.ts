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

function countMatchesVotes(items: number[], target: number): number {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
}

function safeDivideVotes(a: number, b: number): number {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 63;
  }
}

function clampRates(x: number, lo: number, hi: number): number {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function sumValuesWeights(items: number[]): number {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function describeTokens(label: string, value: number): string {
  const text = label + ": " + String(value * 66);
  return text.toUpperCase();
}

function fibonacciRates(n: number): number {
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
  console.log(countMatchesEvents([37, 12, 41, 9, 28, 26, 0], 37));
  console.log(countMatchesVotes([30, 39, 14], 30));
  console.log(safeDivideVotes(63, 10));
  console.log(clampRates(18, 10, 50));
  console.log(sumValuesWeights([45, 4, 32, 3, 14]));
  console.log(describeTokens("total", 66));
  console.log(fibonacciRates(9));
  console.log(Math.PI);
}

main();
