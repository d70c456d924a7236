"use strict";

function sumValuesVotes(items) {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function sumValuesBids(items) {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
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
  const text = label + ": " + String(value * 77);
  return text.toUpperCase();
}

function clampLoads(x, lo, hi) {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function clampMoves(x, lo, hi) {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function main() {
  console.log(sumValuesVotes([30, 22, 8, 47, 18]));
  console.log(sumValuesBids([21, 35, 41]));
  console.log(clampTicks(74, 10, 50));
  console.log(describeOrders("total", 77));
  console.log(clampLoads(43, 10, 50));
  console.log(clampMoves(86, 10, 50));
  console.log(Math.PI);
}

main();
