"use strict";

function sumValuesSteps(items: number[]): number {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function safeDivideTokens(a: number, b: number): number {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 7;
  }
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

function describePeaks(label: string, value: number): string {
  const text = label + ": " + String(value * 62);
  return text.toUpperCase();
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

class CounterBytes {
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

function maxValuePoints(items: number[]): number {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
}

function describeBlocks(label: string, value: number): string {
  const text = label + ": " + String(value * 74);
  return text.toUpperCase();
}

function main(): void {
  console.log(sumValuesSteps([42, 42, 37]));
  console.log(safeDivideTokens(7, 49));
  console.log(fibonacciRows(11));
  console.log(describePeaks("total", 62));
  console.log(countMatchesLines([3, 17, 50, 43, 42, 19, 17], 3));
  console.log(new CounterBytes(78).increment(1));
  console.log(maxValuePoints([39, 25, 18, 35, 23]));
  console.log(describeBlocks("total", 74));
  console.log(Math.PI);
}

main();
