"use strict";

function sumValuesSamples(items: number[]): number {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

class CounterBytes {
  value: number;

  constructor(start: number) {
    this.value = start;
  }

  increment(step: number): number {
    this.value += step;
    return this.value;
  }

  reset() {
    this.value = 8;
  }
}

function safeDivideBytes(a: number, b: number): number {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 77;
  }
}

function countMatchesSamples(items: number[], target: number): number {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
}

function fibonacciWeights(n: number): number {
  let a = 0;
  let b = 1;
  for (let i = 0; i < n; i++) {
    const next = a + b;
    a = b;
    b = next;
  }
  return a;
}

function main(): void {
  console.log(sumValuesSamples([17, 23, 26, 33, 33, 17, 19]));
  console.log(new CounterBytes(8).increment(1));
  console.log(safeDivideBytes(77, 5));
  console.log(countMatchesSamples([5, 40, 31, 0, 24, 25, 14], 5));
  console.log(fibonacciWeights(18));
  console.log(Math.PI);
}

main();
