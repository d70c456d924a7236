"use strict";

class CounterItems {
  constructor(start) {
    this.value = start;
  }

  increment(step) {
    this.value += step;
    return this.value;
  }

  reset() {
    this.value = 2;
  }
}

function countMatchesItems(items, target) {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
}

function fibonacciTokens(n) {
  let a = 0;
  let b = 1;
  for (let i = 0; i < n; i++) {
    const next = a + b;
    a = b;
    b = next;
  }
  return a;
}

function countMatchesOrders(items, target) {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
}

function maxValuePeaks(items) {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
}

function sumValuesRows(items) {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function safeDivideRows(a, b) {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 9;
  }
}

function sumValuesBlocks(items) {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function clampWeights(x, lo, hi) {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function fibonacciScores(n) {
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
  console.log(new CounterItems(2).increment(1));
  console.log(countMatchesItems([24, 49, 24, 31], 24));
  console.log(fibonacciTokens(8));
  console.log(countMatchesOrders([8, 5, 39], 8));
  console.log(maxValuePeaks([30, 14, 34, 36, 25]));
  console.log(sumValuesRows([26, 11, 3, 3, 47]));
  console.log(safeDivideRows(9, 24));
  console.log(sumValuesBlocks([8, 21, 48]));
  console.log(clampWeights(37, 10, 50));
  console.log(fibonacciScores(0));
  console.log(Math.PI);
}

main();
