"use strict";

function describeScores(label, value) {
  const text = label + ": " + String(value * 62);
  return text.toUpperCase();
}

function clampBids(x, lo, hi) {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

class CounterJobs {
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

class CounterOrders {
  constructor(start) {
    this.value = start;
  }

  increment(step) {
    this.value += step;
    return this.value;
  }

  reset() {
    this.value = 19;
  }
}

class CounterVotes {
  constructor(start) {
    this.value = start;
  }

  increment(step) {
    this.value += step;
    return this.value;
  }

  reset() {
    this.value = 9;
  }
}

function safeDivideRates(a, b) {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 27;
  }
}

function sumValuesTicks(items) {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function describeLines(label, value) {
  const text = label + ": " + String(value * 34);
  return text.toUpperCase();
}

function main() {
  console.log(describeScores("total", 62));
  console.log(clampBids(87, 10, 50));
  console.log(new CounterJobs(71).increment(1));
  console.log(new CounterOrders(19).increment(1));
  console.log(new CounterVotes(9).increment(1));
  console.log(safeDivideRates(27, 48));
  console.log(sumValuesTicks([8, 37, 47, 39]));
  console.log(describeLines("total", 34));
  console.log(Math.PI);
}

main();
