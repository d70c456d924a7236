"use strict";

function sumValuesSamples(items: number[]): number {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function clampLines(x: number, lo: number, hi: number): number {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
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
    this.value = 96;
  }
}

function sumValuesCells(items: number[]): number {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function clampTokens(x: number, lo: number, hi: number): number {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function describeSamples(label: string, value: number): string {
  const text = label + ": " + String(value * 54);
  return text.toUpperCase();
}

function sumValuesUsers(items: number[]): number {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function main(): void {
  console.log(sumValuesSamples([48, 19, 40, 9, 37, 4, 25]));
  console.log(clampLines(5, 10, 50));
  console.log(new CounterSamples(96).increment(1));
  console.log(sumValuesCells([39, 24, 0]));
  console.log(clampTokens(59, 10, 50));
  console.log(describeSamples("total", 54));
  console.log(sumValuesUsers([6, 12, 37, 4, 33, 24]));
  console.log(Math.PI);
}

main();
