"use strict";

function sumValuesItems(items) {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function maxValueWeights(items) {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
}

function maxValuePages(items) {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
}

function safeDividePoints(a, b) {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 73;
  }
}

function maxValueLoads(items) {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
}

function main() {
  console.log(sumValuesItems([11, 23, 20, 1]));
  console.log(maxValueWeights([36, 29, 46, 14, 30]));
  console.log(maxValuePages([14, 15, 41]));
  console.log(safeDividePoints(73, 29));
  console.log(maxValueLoads([21, 45, 0, 26]));
  console.log(Math.PI);
}

main();
