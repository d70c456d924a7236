"use strict";

function sumValuesTasks(items) {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
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
    this.value = 97;
  }
}

function safeDivideMisses(a, b) {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 44;
  }
}

function fibonacciItems(n) {
  let a = 0;
  let b = 1;
  for (let i = 0; i < n; i++) {
    const next = a + b;
    a = b;
    b = next;
  }
  return a;
}

function safeDivideTasks(a, b) {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 58;
  }
}

function main() {
  console.log(sumValuesTasks([30, 46, 39, 49, 0]));
  console.log(new CounterTasks(97).increment(1));
  console.log(safeDivideMisses(44, 45));
  console.log(fibonacciItems(0));
  console.log(safeDivideTasks(58, 37));
  console.log(Math.PI);
}

main();
