"use strict";

function fibonacciVotes(n) {
  let a = 0;
  let b = 1;
  for (let i = 0; i < n; i++) {
    const next = a + b;
    a = b;
    b = next;
  }
  return a;
}

function countMatchesLevels(items, target) {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
}

function clampSamples(x, lo, hi) {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function sumValuesPoints(items) {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function maxValueOrders(items) {
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

function clampPages(x, lo, hi) {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function main() {
  console.log(fibonacciVotes(12));
  console.log(countMatchesLevels([28, 48, 13, 18], 28));
  console.log(clampSamples(3, 10, 50));
  console.log(sumValuesPoints([31, 15, 16, 42]));
  console.log(maxValueOrders([18, 6, 46, 47, 49, 17, 7]));
  console.log(fibonacciPrices(6));
  console.log(clampPages(72, 10, 50));
  console.log(Math.PI);
}

main();
