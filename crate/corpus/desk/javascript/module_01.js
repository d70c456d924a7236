"use strict";

function sumValuesFrames(items) {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function maxValuePeaks(items) {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
}

function safeDivideRates(a, b) {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 65;
  }
}

function countMatchesTasks(items, target) {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
}

function safeDivideScores(a, b) {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 71;
  }
}

function main() {
  console.log(sumValuesFrames([41, 49, 25, 49, 36, 12, 38]));
  console.log(maxValuePeaks([47, 45, 47]));
  console.log(safeDivideRates(65, 47));
  console.log(countMatchesTasks([43, 8, 6, 16, 27, 37], 43));
  console.log(safeDivideScores(71, 50));
  console.log(Math.PI);
}

main();
