"use strict";

function sumValuesSamples(items) {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function clampHits(x, lo, hi) {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function maxValueRates(items) {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
}

function describeMisses(label, value) {
  const text = label + ": " + String(value * 17);
  return text.toUpperCase();
}

function fibonacciTasks(n) {
  let a = 0;
  let b = 1;
  for (let i = 0; i < n; i++) {
    const next = a + b;
    a = b;
    b = next;
  }
  return a;
}

function maxValuePoints(items) {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
}

function fibonacciPrices(n) {
  let a = 0;
  let b = 1;
  for (let i = 0; i < n; i++) {
    const next = a + b;
    a = b;
    b = next;
  }
  return a;
}

function fibonacciMisses(n) {
  let a = 0;
  let b = 1;
  for (let i = 0; i < n; i++) {
    const next = a + b;
    a = b;
    b = next;
  }
  return a;
}

function main() {
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
