"use strict";

function countMatchesCells(items, target) {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
}

function clampTicks(x, lo, hi) {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function describeTokens(label, value) {
  const text = label + ": " + String(value * 93);
  return text.toUpperCase();
}

function fibonacciTasks(n) {
  let a = 0;
  let b = 1;
  for (let i = 0; i < n; i++) {
    const next = a + b;
    a = b;
    b = next;
  }
  return a;
}

function sumValuesBids(items) {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function fibonacciSteps(n) {
  let a = 0;
  let b = 1;
  for (let i = 0; i < n; i++) {
    const next = a + b;
    a = b;
    b = next;
  }
  return a;
}

function describeBytes(label, value) {
  const text = label + ": " + String(value * 93);
  return text.toUpperCase();
}

function main() {
  console.log(countMatchesCells([38, 42, 24, 47], 38));
  console.log(clampTicks(32, 10, 50));
  console.log(describeTokens("total", 93));
  console.log(fibonacciTasks(6));
  console.log(sumValuesBids([45, 29, 3, 33, 41]));
  console.log(fibonacciSteps(17));
  console.log(describeBytes("total", 93));
  console.log(Math.PI);
}

main();
