"use strict";

function countMatchesLevels(items, target) {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
}

function clampUsers(x, lo, hi) {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function maxValueBids(items) {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
}

function sumValuesCells(items) {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function clampRows(x, lo, hi) {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function safeDivideEvents(a, b) {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 15;
  }
}

function maxValueTokens(items) {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
}

function countMatchesOrders(items, target) {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
}

function countMatchesTicks(items, target) {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
}

function sumValuesBytes(items) {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function main() {
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
