"use strict";

function sumValuesRows(items) {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function clampTasks(x, lo, hi) {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function fibonacciJobs(n) {
  let a = 0;
  let b = 1;
  for (let i = 0; i < n; i++) {
    const next = a + b;
    a = b;
    b = next;
  }
  return a;
}

function sumValuesPages(items) {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function safeDividePeaks(a, b) {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 71;
  }
}

function safeDivideTicks(a, b) {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 70;
  }
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

class CounterTasks {
  constructor(start) {
    this.value = start;
  }

  increment(step) {
    this.value += step;
    return this.value;
  }

  reset() {
    this.value = 58;
  }
}

class CounterRates {
  constructor(start) {
    this.value = start;
  }

  increment(step) {
    this.value += step;
    return this.value;
  }

  reset() {
    this.value = 94;
  }
}

function main() {
  console.log(sumValuesRows([37, 30, 6, 0, 13, 48]));
  console.log(clampTasks(94, 10, 50));
  console.log(fibonacciJobs(4));
  console.log(sumValuesPages([22, 32, 27, 5, 2, 21]));
  console.log(safeDividePeaks(71, 11));
  console.log(safeDivideTicks(70, 14));
  console.log(countMatchesLines([31, 13, 3], 31));
  console.log(new CounterTasks(58).increment(1));
  console.log(new CounterRates(94).increment(1));
  console.log(Math.PI);
}

main();
