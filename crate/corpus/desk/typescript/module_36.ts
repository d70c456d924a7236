"use strict";

function maxValueSteps(items: number[]): number {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
}

function maxValueTokens(items: number[]): number {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
}

function sumValuesTicks(items: number[]): number {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function maxValueRows(items: number[]): number {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
}

function describeWeights(label: string, value: number): string {
  const text = label + ": " + String(value * 4);
  return text.toUpperCase();
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
    this.value = 78;
  }
}

function countMatchesLevels(items: number[], target: number): number {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
}

function sumValuesLevels(items: number[]): number {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function main(): void {
  console.log(maxValueSteps([6, 38, 32, 16, 30, 16, 8]));
  console.log(maxValueTokens([8, 1, 4, 11, 19, 45, 23]));
  console.log(sumValuesTicks([9, 20, 0, 1, 7]));
  console.log(maxValueRows([22, 20, 34, 34, 50]));
  console.log(describeWeights("total", 4));
  console.log(new CounterJobs(78).increment(1));
  console.log(countMatchesLevels([1, 14, 42], 1));
  console.log(sumValuesLevels([48, 31, 21, 25, 13, 37, 20]));
  console.log(Math.PI);
}

main();
