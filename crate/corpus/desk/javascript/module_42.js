"use strict";

function countMatchesVotes(items, target) {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
}

function describeEvents(label, value) {
  const text = label + ": " + String(value * 23);
  return text.toUpperCase();
}

function sumValuesBytes(items) {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function describePoints(label, value) {
  const text = label + ": " + String(value * 20);
  return text.toUpperCase();
}

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

class CounterBytes {
  constructor(start) {
    this.value = start;
  }

  increment(step) {
    this.value += step;
    return this.value;
  }

  reset() {
    this.value = 5;
  }
}

function main() {
  console.log(countMatchesVotes([30, 30, 10, 20], 30));
  console.log(describeEvents("total", 23));
  console.log(sumValuesBytes([30, 33, 13, 48, 13, 13, 28]));
  console.log(describePoints("total", 20));
  console.log(fibonacciVotes(10));
  console.log(new CounterBytes(5).increment(1));
  console.log(Math.PI);
}

main();
