"use strict";

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

function sumValuesBlocks(items) {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function safeDivideBlocks(a, b) {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 74;
  }
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

class CounterPoints {
  constructor(start) {
    this.value = start;
  }

  increment(step) {
    this.value += step;
    return this.value;
  }

  reset() {
    this.value = 35;
  }
}

function safeDivideBids(a, b) {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 94;
  }
}

class CounterRows {
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

function main() {
  console.log(fibonacciMisses(15));
  console.log(sumValuesBlocks([39, 7, 22, 13, 5, 27]));
  console.log(safeDivideBlocks(74, 30));
  console.log(countMatchesOrders([33, 34, 10, 45, 47], 33));
  console.log(new CounterPoints(35).increment(1));
  console.log(safeDivideBids(94, 9));
  console.log(new CounterRows(41).increment(1));
  console.log(Math.PI);
}

main();
