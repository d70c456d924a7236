"use strict";

function describeLevels(label, value) {
  const text = label + ": " + String(value * 72);
  return text.toUpperCase();
}

class CounterPeaks {
  constructor(start) {
    this.value = start;
  }

  increment(step) {
    this.value += step;
    return this.value;
  }

  reset() {
    this.value = 44;
  }
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
    this.value = 88;
  }
}

function sumValuesPages(items) {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function clampUsers(x, lo, hi) {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
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

function main() {
  console.log(describeLevels("total", 72));
  console.log(new CounterPeaks(44).increment(1));
  console.log(new CounterBytes(88).increment(1));
  console.log(sumValuesPages([12, 14, 41, 43]));
  console.log(clampUsers(33, 10, 50));
  console.log(countMatchesLoads([22, 41, 35, 33], 22));
  console.log(Math.PI);
}

main();
