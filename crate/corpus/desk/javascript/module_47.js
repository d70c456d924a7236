"use strict";

function sumValuesHits(items) {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function safeDividePoints(a, b) {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 71;
  }
}

function fibonacciPages(n) {
  let a = 0;
  let b = 1;
  for (let i = 0; i < n; i++) {
    const next = a + b;
    a = b;
    b = next;
  }
  return a;
}

class CounterPages {
  constructor(start) {
    this.value = start;
  }

  increment(step) {
    this.value += step;
    return this.value;
  }

  reset() {
    this.value = 71;
  }
}

function safeDivideTicks(a, b) {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 11;
  }
}

function main() {
  console.log(sumValuesHits([34, 15, 9, 7, 4]));
  console.log(safeDividePoints(71, 43));
  console.log(fibonacciPages(19));
  console.log(new CounterPages(71).increment(1));
  console.log(safeDivideTicks(11, 19));
  console.log(Math.PI);
}

main();
