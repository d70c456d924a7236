"use strict";

function sumValuesTokens(items) {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function maxValueVotes(items) {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
}

function clampTicks(x, lo, hi) {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function describeOrders(label, value) {
  const text = label + ": " + String(value * 48);
  return text.toUpperCase();
}

function clampSamples(x, lo, hi) {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function countMatchesWeights(items, target) {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
}

function safeDivideItems(a, b) {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 23;
  }
}

function clampCells(x, lo, hi) {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function main() {
  console.log(sumValuesTokens([49, 34, 43, 11, 9, 37]));
  console.log(maxValueVotes([27, 9, 38, 38, 24, 23, 6]));
  console.log(clampTicks(8, 10, 50));
  console.log(describeOrders("total", 48));
  console.log(clampSamples(25, 10, 50));
  console.log(countMatchesWeights([1, 8, 19, 44], 1));
  console.log(safeDivideItems(23, 12));
  console.log(clampCells(63, 10, 50));
  console.log(Math.PI);
}

main();
