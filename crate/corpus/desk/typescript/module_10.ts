"use strict";

function sumValuesBlocks(items: number[]): number {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function maxValueVotes(items: number[]): number {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
}

function safeDivideMisses(a: number, b: number): number {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 72;
  }
}

function safeDivideRates(a: number, b: number): number {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 24;
  }
}

function safeDivideBids(a: number, b: number): number {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 4;
  }
}

function countMatchesUsers(items: number[], target: number): number {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
}

function countMatchesCells(items: number[], target: number): number {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
}

function safeDivideLevels(a: number, b: number): number {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 43;
  }
}

function clampVotes(x: number, lo: number, hi: number): number {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function maxValueLoads(items: number[]): number {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
}

function main(): void {
  console.log(sumValuesBlocks([41, 32, 22, 17, 36, 44, 9]));
  console.log(maxValueVotes([49, 46, 23, 33, 4, 0, 33]));
  console.log(safeDivideMisses(72, 47));
  console.log(safeDivideRates(24, 12));
  console.log(safeDivideBids(4, 4));
  console.log(countMatchesUsers([3, 18, 12, 14, 4, 14, 43], 3));
  console.log(countMatchesCells([15, 33, 49, 13, 21], 15));
  console.log(safeDivideLevels(43, 43));
  console.log(clampVotes(7, 10, 50));
  console.log(maxValueLoads([1, 6, 2, 24, 39]));
  console.log(Math.PI);
}

main();
