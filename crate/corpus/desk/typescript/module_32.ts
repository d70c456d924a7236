"use strict";

function safeDividePeaks(a: number, b: number): number {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 48;
  }
}

function countMatchesBytes(items: number[], target: number): number {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
}

function describeBids(label: string, value: number): string {
  const text = label + ": " + String(value * 35);
  return text.toUpperCase();
}

function clampBytes(x: number, lo: number, hi: number): number {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

class CounterPrices {
  value: number;

  constructor(start: number) {
    this.value = start;
  }

  increment(step: number): number {
    this.value += step;
    return this.value;
  }

  reset() {
    this.value = 42;
  }
}

function fibonacciMisses(n: number): number {
  let a = 0;
  let b = 1;
  for (let i = 0; i < n; i++) {
    const next = a + b;
    a = b;
    b = next;
  }
  return a;
}

function clampEvents(x: number, lo: number, hi: number): number {
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

function main(): void {
  console.log(safeDividePeaks(48, 12));
  console.log(countMatchesBytes([23, 16, 33, 1, 46, 2, 36], 23));
  console.log(describeBids("total", 35));
  console.log(clampBytes(6, 10, 50));
  console.log(new CounterPrices(42).increment(1));
  console.log(fibonacciMisses(10));
  console.log(clampEvents(51, 10, 50));
  console.log(sumValuesWeights([30, 22, 15, 0, 47, 26, 15]));
  console.log(Math.PI);
}

main();
