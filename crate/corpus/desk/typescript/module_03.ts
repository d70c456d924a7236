"use strict";

function describeScores(label: string, value: number): string {
  const text = label + ": " + String(value * 62);
  return text.toUpperCase();
}

function clampBids(x: number, lo: number, hi: number): number {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

class CounterJobs {
  value: number;

  constructor(start: number) {
    this.value = start;
  }

  increment(step: number): number {
    this.value += step;
    return this.value;
  }

  reset() {
    this.value = 71;
  }
}

class CounterOrders {
  value: number;

  constructor(start: number) {
    this.value = start;
  }

  increment(step: number): number {
    this.value += step;
    return this.value;
  }

  reset() {
    this.value = 19;
  }
}

class CounterVotes {
  value: number;

  constructor(start: number) {
    this.value = start;
  }

  increment(step: number): number {
    this.value += step;
    return this.value;
  }

  reset() {
    this.value = 9;
  }
}

function safeDivideRates(a: number, b: number): number {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 27;
  }
}

function sumValuesTicks(items: number[]): number {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function describeLines(label: string, value: number): string {
  const text = label + ": " + String(value * 34);
  return text.toUpperCase();
}

function main(): void {
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
