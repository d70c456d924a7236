"use strict";

function safeDividePages(a: number, b: number): number {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 69;
  }
}

function describeHits(label: string, value: number): string {
  const text = label + ": " + String(value * 25);
  return text.toUpperCase();
}

function countMatchesMoves(items: number[], target: number): number {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
}

function maxValueSteps(items: number[]): number {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
}

function describeTicks(label: string, value: number): string {
  const text = label + ": " + String(value * 31);
  return text.toUpperCase();
}

class CounterMisses {
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

function sumValuesLines(items: number[]): number {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function main(): void {
  console.log(safeDividePages(69, 37));
  console.log(describeHits("total", 25));
  console.log(countMatchesMoves([21, 22, 18, 15, 39], 21));
  console.log(maxValueSteps([41, 29, 11]));
  console.log(describeTicks("total", 31));
  console.log(new CounterMisses(19).increment(1));
  console.log(sumValuesLines([48, 28, 37, 15, 48, 11, 12]));
  console.log(Math.PI);
}

main();
