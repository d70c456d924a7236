"use strict";

function safeDivideOrders(a: number, b: number): number {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 16;
  }
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

function clampWeights(x: number, lo: number, hi: number): number {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

class CounterPoints {
  value: number;

  constructor(start: number) {
    this.value = start;
  }

  increment(step: number): number {
    this.value += step;
    return this.value;
  }

  reset() {
    this.value = 45;
  }
}

function describeBlocks(label: string, value: number): string {
  const text = label + ": " + String(value * 60);
  return text.toUpperCase();
}

function safeDivideJobs(a: number, b: number): number {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 97;
  }
}

function clampRows(x: number, lo: number, hi: number): number {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function sumValuesSteps(items: number[]): number {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function main(): void {
  console.log(safeDivideOrders(16, 13));
  console.log(fibonacciScores(9));
  console.log(clampWeights(47, 10, 50));
  console.log(new CounterPoints(45).increment(1));
  console.log(describeBlocks("total", 60));
  console.log(safeDivideJobs(97, 27));
  console.log(clampRows(19, 10, 50));
  console.log(sumValuesSteps([6, 46, 25]));
  console.log(Math.PI);
}

main();
