"use strict";

function clampTokens(x, lo, hi) {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
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

class CounterFrames {
  constructor(start) {
    this.value = start;
  }

  increment(step) {
    this.value += step;
    return this.value;
  }

  reset() {
    this.value = 6;
  }
}

function maxValueLines(items) {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
}

function maxValueRows(items) {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
}

function clampMoves(x, lo, hi) {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function sumValuesPrices(items) {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function safeDivideRates(a, b) {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 37;
  }
}

function safeDivideTasks(a, b) {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 57;
  }
}

function countMatchesWeights(items, target) {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
}

function main() {
  console.log(clampTokens(23, 10, 50));
  console.log(fibonacciPrices(3));
  console.log(new CounterFrames(6).increment(1));
  console.log(maxValueLines([10, 29, 47, 18, 1, 5, 3]));
  console.log(maxValueRows([34, 22, 45]));
  console.log(clampMoves(53, 10, 50));
  console.log(sumValuesPrices([22, 37, 43]));
  console.log(safeDivideRates(37, 33));
  console.log(safeDivideTasks(57, 43));
  console.log(countMatchesWeights([16, 11, 23, 36, 26], 16));
  console.log(Math.PI);
}

main();
