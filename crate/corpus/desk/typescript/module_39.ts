"use strict";

function countMatchesLevels(items: number[], target: number): number {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
}

function clampUsers(x: number, lo: number, hi: number): number {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function maxValueBids(items: number[]): number {
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

function clampRows(x: number, lo: number, hi: number): number {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function safeDivideEvents(a: number, b: number): number {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 15;
  }
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

function countMatchesOrders(items: number[], target: number): number {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
}

function countMatchesTicks(items: number[], target: number): number {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
}

function sumValuesBytes(items: number[]): number {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function main(): void {
  console.log(countMatchesLevels([23, 43, 1], 23));
  console.log(clampUsers(68, 10, 50));
  console.log(maxValueBids([7, 20, 28, 25, 6, 14]));
  console.log(sumValuesCells([19, 6, 13]));
  console.log(clampRows(96, 10, 50));
  console.log(safeDivideEvents(15, 40));
  console.log(maxValueTokens([4, 30, 32, 21, 21]));
  console.log(countMatchesOrders([33, 5, 20], 33));
  console.log(countMatchesTicks([16, 21, 40, 45, 6], 16));
  console.log(sumValuesBytes([42, 31, 39, 21]));
  console.log(Math.PI);
}

main();
