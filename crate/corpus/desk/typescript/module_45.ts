"use strict";

function sumValuesLoads(items: number[]): number {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function safeDivideTasks(a: number, b: number): number {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 79;
  }
}

class CounterUsers {
  value: number;

  constructor(start: number) {
    this.value = start;
  }

  increment(step: number): number {
    this.value += step;
    return this.value;
  }

  reset() {
    this.value = 29;
  }
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
    this.value = 14;
  }
}

function maxValueTicks(items: number[]): number {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
}

class CounterMoves {
  value: number;

  constructor(start: number) {
    this.value = start;
  }

  increment(step: number): number {
    this.value += step;
    return this.value;
  }

  reset() {
    this.value = 26;
  }
}

function countMatchesEvents(items: number[], target: number): number {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
}

function describePeaks(label: string, value: number): string {
  const text = label + ": " + String(value * 92);
  return text.toUpperCase();
}

class CounterHits {
  value: number;

  constructor(start: number) {
    this.value = start;
  }

  increment(step: number): number {
    this.value += step;
    return this.value;
  }

  reset() {
    this.value = 41;
  }
}

class CounterFrames {
  value: number;

  constructor(start: number) {
    this.value = start;
  }

  increment(step: number): number {
    this.value += step;
    return this.value;
  }

  reset() {
    this.value = 16;
  }
}

function main(): void {
  console.log(sumValuesLoads([42, 37, 11, 32, 5, 14, 0]));
  console.log(safeDivideTasks(79, 38));
  console.log(new CounterUsers(29).increment(1));
  console.log(new CounterSamples(14).increment(1));
  console.log(maxValueTicks([9, 1, 30]));
  console.log(new CounterMoves(26).increment(1));
  console.log(countMatchesEvents([0, 21, 29, 46, 25, 1], 0));
  console.log(describePeaks("total", 92));
  console.log(new CounterHits(41).increment(1));
  console.log(new CounterFrames(16).increment(1));
  console.log(Math.PI);
}

main();
