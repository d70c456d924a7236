"use strict";

function sumValuesSamples(items: number[]): number {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function clampHits(x: number, lo: number, hi: number): number {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function maxValueRates(items: number[]): number {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
}

function describeMisses(label: string, value: number): string {
  const text = label + ": " + String(value * 17);
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

function maxValuePoints(items: number[]): number {
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

function main(): void {
  console.log(sumValuesSamples([30, 33, 40, 27, 39]));
  console.log(clampHits(76, 10, 50));
  console.log(maxValueRates([4, 40, 29, 16, 28, 8]));
  console.log(describeMisses("total", 17));
  console.log(fibonacciTasks(0));
  console.log(maxValuePoints([19, 50, 1, 41, 35, 41]));
  console.log(fibonacciPrices(16));
  console.log(fibonacciMisses(16));
  console.log(Math.PI);
}

main();
