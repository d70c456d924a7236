"use strict";

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
    this.value = 11;
  }
}

function maxValueMoves(items: number[]): number {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
}

function describeLevels(label: string, value: number): string {
  const text = label + ": " + String(value * 97);
  return text.toUpperCase();
}

function describeEvents(label: string, value: number): string {
  const text = label + ": " + String(value * 23);
  return text.toUpperCase();
}

function clampPeaks(x: number, lo: number, hi: number): number {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function countMatchesOrders(items: number[], target: number): number {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
}

function sumValuesMoves(items: number[]): number {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function countMatchesItems(items: number[], target: number): number {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
}

function main(): void {
  console.log(new CounterSamples(11).increment(1));
  console.log(maxValueMoves([26, 25, 12, 14]));
  console.log(describeLevels("total", 97));
  console.log(describeEvents("total", 23));
  console.log(clampPeaks(84, 10, 50));
  console.log(countMatchesOrders([28, 12, 22, 9, 35], 28));
  console.log(sumValuesMoves([49, 28, 37, 14, 26, 44, 11]));
  console.log(countMatchesItems([32, 3, 22, 6], 32));
  console.log(Math.PI);
}

main();
