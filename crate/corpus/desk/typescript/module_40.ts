"use strict";

function countMatchesCells(items: number[], target: number): number {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
}

function clampTicks(x: number, lo: number, hi: number): number {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function describeTokens(label: string, value: number): string {
  const text = label + ": " + String(value * 93);
  return text.toUpperCase();
}

function fibonacciTasks(n: number): number {
  let a = 0;
  let b = 1;
  for (let i = 0; i < n; i++) {
    const next = a + b;
    a = b;
    b = next;
  }
  return a;
}

function sumValuesBids(items: number[]): number {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function fibonacciSteps(n: number): number {
  let a = 0;
  let b = 1;
  for (let i = 0; i < n; i++) {
    const next = a + b;
    a = b;
    b = next;
  }
  return a;
}

function describeBytes(label: string, value: number): string {
  const text = label + ": " + String(value * 93);
  return text.toUpperCase();
}

function main(): void {
  console.log(countMatchesCells([38, 42, 24, 47], 38));
  console.log(clampTicks(32, 10, 50));
  console.log(describeTokens("total", 93));
  console.log(fibonacciTasks(6));
  console.log(sumValuesBids([45, 29, 3, 33, 41]));
  console.log(fibonacciSteps(17));
  console.log(describeBytes("total", 93));
  console.log(Math.PI);
}

main();
