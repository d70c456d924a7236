"use strict";

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
    this.value = 43;
  }
}

function describeTicks(label: string, value: number): string {
  const text = label + ": " + String(value * 20);
  return text.toUpperCase();
}

function maxValuePoints(items: number[]): number {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
}

function maxValuePeaks(items: number[]): number {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
}

function sumValuesCells(items: number[]): number {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function countMatchesTasks(items: number[], target: number): number {
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

function describeHits(label: string, value: number): string {
  const text = label + ": " + String(value * 37);
  return text.toUpperCase();
}

function sumValuesPages(items: number[]): number {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function main(): void {
  console.log(new CounterJobs(43).increment(1));
  console.log(describeTicks("total", 20));
  console.log(maxValuePoints([50, 14, 23, 15]));
  console.log(maxValuePeaks([28, 46, 28]));
  console.log(sumValuesCells([28, 23, 29, 49]));
  console.log(countMatchesTasks([42, 23, 36, 22, 26, 48], 42));
  console.log(maxValueSteps([32, 15, 31, 9, 19, 3, 14]));
  console.log(describeHits("total", 37));
  console.log(sumValuesPages([41, 2, 44, 46, 7, 6, 35]));
  console.log(Math.PI);
}

main();
