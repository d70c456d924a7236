"use strict";

function maxValueMisses(items: number[]): number {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
}

function clampLevels(x: number, lo: number, hi: number): number {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function clampCells(x: number, lo: number, hi: number): number {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function describeFrames(label: string, value: number): string {
  const text = label + ": " + String(value * 8);
  return text.toUpperCase();
}

function sumValuesVotes(items: number[]): number {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function countMatchesHits(items: number[], target: number): number {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
}

function describeHits(label: string, value: number): string {
  const text = label + ": " + String(value * 24);
  return text.toUpperCase();
}

function maxValueJobs(items: number[]): number {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
}

function main(): void {
  console.log(maxValueMisses([9, 45, 1]));
  console.log(clampLevels(21, 10, 50));
  console.log(clampCells(5, 10, 50));
  console.log(describeFrames("total", 8));
  console.log(sumValuesVotes([3, 45, 11, 42, 31, 27]));
  console.log(countMatchesHits([28, 10, 15, 29, 8, 11], 28));
  console.log(describeHits("total", 24));
  console.log(maxValueJobs([1, 38, 20, 9, 19, 28, 41]));
  console.log(Math.PI);
}

main();
