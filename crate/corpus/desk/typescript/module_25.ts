"use strict";

function sumValuesVotes(items: number[]): number {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function sumValuesBids(items: number[]): number {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function clampTicks(x: number, lo: number, hi: number): number {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function describeOrders(label: string, value: number): string {
  const text = label + ": " + String(value * 77);
  return text.toUpperCase();
}

function clampLoads(x: number, lo: number, hi: number): number {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function clampMoves(x: number, lo: number, hi: number): number {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function main(): void {
  console.log(sumValuesVotes([30, 22, 8, 47, 18]));
  console.log(sumValuesBids([21, 35, 41]));
  console.log(clampTicks(74, 10, 50));
  console.log(describeOrders("total", 77));
  console.log(clampLoads(43, 10, 50));
  console.log(clampMoves(86, 10, 50));
  console.log(Math.PI);
}

main();
