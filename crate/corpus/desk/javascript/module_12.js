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

function countMatchesVotes(items, target) {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
}

function safeDivideVotes(a, b) {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 63;
  }
}

function clampRates(x, lo, hi) {
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

function describeTokens(label, value) {
  const text = label + ": " + String(value * 66);
  return text.toUpperCase();
}

function fibonacciRates(n) {
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
  console.log(countMatchesEvents([37, 12, 41, 9, 28, 26, 0], 37));
  console.log(countMatchesVotes([30, 39, 14], 30));
  console.log(safeDivideVotes(63, 10));
  console.log(clampRates(18, 10, 50));
  console.log(sumValuesWeights([45, 4, 32, 3, 14]));
  console.log(describeTokens("total", 66));
  console.log(fibonacciRates(9));
  console.log(Math.PI);
}

main();
