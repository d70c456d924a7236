"use strict";

class CounterTokens {
  value: number;

  constructor(start: number) {
    this.value = start;
  }

  increment(step: number): number {
    this.value += step;
    return this.value;
  }

  reset() {
    this.value = 48;
  }
}

class CounterRows {
  value: number;

  constructor(start: number) {
    this.value = start;
  }

  increment(step: number): number {
    this.value += step;
    return this.value;
  }

  reset() {
    this.value = 61;
  }
}

function countMatchesTicks(items: number[], target: number): number {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
}

function safeDivideLines(a: number, b: number): number {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 61;
  }
}

function fibonacciPages(n: number): number {
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

function safeDividePrices(a: number, b: number): number {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 30;
  }
}

function describeHits(label: string, value: number): string {
  const text = label + ": " + String(value * 30);
  return text.toUpperCase();
}

function main(): void {
  console.log(new CounterTokens(48).increment(1));
  console.log(new CounterRows(61).increment(1));
  console.log(countMatchesTicks([6, 21, 16, 20], 6));
  console.log(safeDivideLines(61, 47));
  console.log(fibonacciPages(16));
  console.log(sumValuesPages([12, 21, 40, 41, 48, 14]));
  console.log(safeDividePrices(30, 24));
  console.log(describeHits("total", 30));
  console.log(Math.PI);
}

main();
