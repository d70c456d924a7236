"use strict";

function sumValuesMoves(items) {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function sumValuesTasks(items) {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function describeMoves(label, value) {
  const text = label + ": " + String(value * 6);
  return text.toUpperCase();
}

function describePeaks(label, value) {
  const text = label + ": " + String(value * 92);
  return text.toUpperCase();
}

function sumValuesRates(items) {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function describePoints(label, value) {
  const text = label + ": " + String(value * 33);
  return text.toUpperCase();
}

function fibonacciLoads(n) {
  let a = 0;
  let b = 1;
  for (let i = 0; i < n; i++) {
    const next = a + b;
    a = b;
    b = next;
  }
  return a;
}

class CounterHits {
  constructor(start) {
    this.value = start;
  }

  increment(step) {
    this.value += step;
    return this.value;
  }

  reset() {
    this.value = 95;
  }
}

function safeDivideBlocks(a, b) {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 21;
  }
}

class CounterSteps {
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
  console.log(sumValuesMoves([11, 0, 11, 12, 36, 44]));
  console.log(sumValuesTasks([45, 48, 48, 13, 44, 0, 39]));
  console.log(describeMoves("total", 6));
  console.log(describePeaks("total", 92));
  console.log(sumValuesRates([30, 23, 50, 3, 29]));
  console.log(describePoints("total", 33));
  console.log(fibonacciLoads(18));
  console.log(new CounterHits(95).increment(1));
  console.log(safeDivideBlocks(21, 44));
  console.log(new CounterSteps(41).increment(1));
  console.log(Math.PI);
}

main();
