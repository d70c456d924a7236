"use strict";

function sumValuesFrames(items: number[]): number {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
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

function safeDivideRates(a: number, b: number): number {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 65;
  }
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

function safeDivideScores(a: number, b: number): number {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 71;
  }
}

function main(): void {
  console.log(sumValuesFrames([41, 49, 25, 49, 36, 12, 38]));
  console.log(maxValuePeaks([47, 45, 47]));
  console.log(safeDivideRates(65, 47));
  console.log(countMatchesTasks([43, 8, 6, 16, 27, 37], 43));
  console.log(safeDivideScores(71, 50));
  console.log(Math.PI);
}

main();
