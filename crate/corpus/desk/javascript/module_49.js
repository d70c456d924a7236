"use strict";

class CounterPoints {
  constructor(start) {
    this.value = start;
  }

  increment(step) {
    this.value += step;
    return this.value;
  }

  reset() {
    this.value = 41;
  }
}

function sumValuesSteps(items) {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function clampPrices(x, lo, hi) {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

class CounterPeaks {
  constructor(start) {
    this.value = start;
  }

  increment(step) {
    this.value += step;
    return this.value;
  }

  reset() {
    this.value = 49;
  }
}

function describeLines(label, value) {
  const text = label + ": " + String(value * 91);
  return text.toUpperCase();
}

function fibonacciBlocks(n) {
  let a = 0;
  let b = 1;
  for (let i = 0; i < n; i++) {
    const next = a + b;
    a = b;
    b = next;
  }
  return a;
}

function countMatchesPeaks(items, target) {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
}

function sumValuesWeights(items) {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function sumValuesTokens(items) {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function maxValueScores(items) {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
}

function main() {
  console.log(new CounterPoints(41).increment(1));
  console.log(sumValuesSteps([40, 37, 38, 36, 43, 49]));
  console.log(clampPrices(44, 10, 50));
  console.log(new CounterPeaks(49).increment(1));
  console.log(describeLines("total", 91));
  console.log(fibonacciBlocks(4));
  console.log(countMatchesPeaks([10, 33, 19, 14, 15], 10));
  console.log(sumValuesWeights([23, 4, 43]));
  console.log(sumValuesTokens([35, 38, 31, 36]));
  console.log(maxValueScores([31, 22, 7, 36, 36, 6]));
  console.log(Math.PI);
}

main();
