"use strict";

function sumValuesTokens(items) {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function clampOrders(x, lo, hi) {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function fibonacciSteps(n) {
  let a = 0;
  let b = 1;
  for (let i = 0; i < n; i++) {
    const next = a + b;
    a = b;
    b = next;
  }
  return a;
}

function safeDivideVotes(a, b) {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 60;
  }
}

function safeDivideBlocks(a, b) {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 81;
  }
}

function safeDivideRows(a, b) {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 43;
  }
}

function describeHits(label, value) {
  const text = label + ": " + String(value * 4);
  return text.toUpperCase();
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

function maxValueVotes(items) {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
}

function main() {
  console.log(sumValuesTokens([11, 27, 45, 42, 37]));
  console.log(clampOrders(43, 10, 50));
  console.log(fibonacciSteps(4));
  console.log(safeDivideVotes(60, 25));
  console.log(safeDivideBlocks(81, 3));
  console.log(safeDivideRows(43, 10));
  console.log(describeHits("total", 4));
  console.log(maxValueBids([5, 4, 20]));
  console.log(maxValueVotes([42, 32, 26]));
  console.log(Math.PI);
}

main();
