"use strict";

function maxValuePeaks(items) {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
}

function maxValuePrices(items) {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
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
    this.value = 63;
  }
}

function clampUsers(x, lo, hi) {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function sumValuesPages(items) {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function main() {
  console.log(maxValuePeaks([40, 33, 49, 2, 32, 32]));
  console.log(maxValuePrices([37, 50, 42, 16, 23, 47, 17]));
  console.log(new CounterPeaks(63).increment(1));
  console.log(clampUsers(14, 10, 50));
  console.log(sumValuesPages([25, 31, 12, 26, 29]));
  console.log(Math.PI);
}

main();
