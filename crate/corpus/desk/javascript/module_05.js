"use strict";

function sumValuesSteps(items) {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function safeDivideTokens(a, b) {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 7;
  }
}

function fibonacciRows(n) {
  let a = 0;
  let b = 1;
  for (let i = 0; i < n; i++) {
    const next = a + b;
    a = b;
    b = next;
  }
  return a;
}

function describePeaks(label, value) {
  const text = label + ": " + String(value * 62);
  return text.toUpperCase();
}

function countMatchesLines(items, target) {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
}

class CounterBytes {
  constructor(start) {
    this.value = start;
  }

  increment(step) {
    this.value += step;
    return this.value;
  }

  reset() {
    this.value = 78;
  }
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

function describeBlocks(label, value) {
  const text = label + ": " + String(value * 74);
  return text.toUpperCase();
}

function main() {
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
