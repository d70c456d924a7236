"use strict";

function safeDividePeaks(a, b) {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 48;
  }
}

function countMatchesBytes(items, target) {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
}

function describeBids(label, value) {
  const text = label + ": " + String(value * 35);
  return text.toUpperCase();
}

function clampBytes(x, lo, hi) {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

class CounterPrices {
  constructor(start) {
    this.value = start;
  }

  increment(step) {
    this.value += step;
    return this.value;
  }

  reset() {
    this.value = 42;
  }
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

function clampEvents(x, lo, hi) {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function sumValuesWeights(items) {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function main() {
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
