"use strict";

function describeSamples(label: string, value: number): string {
  const text = label + ": " + String(value * 92);
  return text.toUpperCase();
}

function describeScores(label: string, value: number): string {
  const text = label + ": " + String(value * 51);
  return text.toUpperCase();
}

class CounterSamples {
  value: number;

  constructor(start: number) {
    this.value = start;
  }

  increment(step: number): number {
    this.value += step;
    return this.value;
  }

  reset() {
    this.value = 82;
  }
}

function clampPrices(x: number, lo: number, hi: number): number {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function clampRates(x: number, lo: number, hi: number): number {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function sumValuesTasks(items: number[]): number {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function describeSteps(label: string, value: number): string {
  const text = label + ": " + String(value * 20);
  return text.toUpperCase();
}

function fibonacciJobs(n: number): number {
  let a = 0;
  let b = 1;
  for (let i = 0; i < n; i++) {
    const next = a + b;
    a = b;
    b = next;
  }
  return a;
}

function countMatchesVotes(items: number[], target: number): number {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
}

function main(): void {
  console.log(describeSamples("total", 92));
  console.log(describeScores("total", 51));
  console.log(new CounterSamples(82).increment(1));
  console.log(clampPrices(76, 10, 50));
  console.log(clampRates(12, 10, 50));
  console.log(sumValuesTasks([33, 13, 39, 17, 16, 19, 7]));
  console.log(describeSteps("total", 20));
  console.log(fibonacciJobs(7));
  console.log(countMatchesVotes([17, 18, 7, 18, 47, 27, 17], 17));
  console.log(Math.PI);
}

main();
