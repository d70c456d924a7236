"use strict";

function countMatchesEvents(items, target) {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
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

function countMatchesLoads(items, target) {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
}

function clampBytes(x, lo, hi) {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function sumValuesMoves(items) {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function main() {
  console.log(countMatchesEvents([3, 28, 37, 18, 46, 39, 2], 3));
  console.log(fibonacciPrices(17));
  console.log(countMatchesLoads([17, 44, 41], 17));
  console.log(clampBytes(39, 10, 50));
  console.log(sumValuesMoves([0, 3, 37, 28]));
  console.log(Math.PI);
}

main();
