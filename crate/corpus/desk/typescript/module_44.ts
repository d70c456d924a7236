"use strict";

function describeLevels(label: string, value: number): string {
  const text = label + ": " + String(value * 72);
  return text.toUpperCase();
}

class CounterPeaks {
  value: number;

  constructor(start: number) {
    this.value = start;
  }

  increment(step: number): number {
    this.value += step;
    return this.value;
  }

  reset() {
    this.value = 44;
  }
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
    this.value = 88;
  }
}

function sumValuesPages(items: number[]): number {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function clampUsers(x: number, lo: number, hi: number): number {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function countMatchesLoads(items: number[], target: number): number {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
}

function main(): void {
  console.log(describeLevels("total", 72));
  console.log(new CounterPeaks(44).increment(1));
  console.log(new CounterBytes(88).increment(1));
  console.log(sumValuesPages([12, 14, 41, 43]));
  console.log(clampUsers(33, 10, 50));
  console.log(countMatchesLoads([22, 41, 35, 33], 22));
  console.log(Math.PI);
}

main();
