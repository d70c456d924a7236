"use strict";

function sumValuesTasks(items) {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function fibonacciMisses(n) {
  let a = 0;
  let b = 1;
  for (let i = 0; i < n; i++) {
    const next = a + b;
    a = b;
    b = next;
  }
  return a;
}

function safeDivideCells(a, b) {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 80;
  }
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

function clampLines(x, lo, hi) {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function main() {
  console.log(sumValuesTasks([46, 34, 20, 49, 34, 47]));
  console.log(fibonacciMisses(16));
  console.log(safeDivideCells(80, 45));
  console.log(fibonacciBlocks(19));
  console.log(clampLines(78, 10, 50));
  console.log(Math.PI);
}

main();
