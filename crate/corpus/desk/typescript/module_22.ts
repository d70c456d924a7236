"use strict";

function sumValuesItems(items: number[]): number {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function describeFrames(label: string, value: number): string {
  const text = label + ": " + String(value * 37);
  return text.toUpperCase();
}

function maxValuePages(items: number[]): number {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
}

function safeDivideMoves(a: number, b: number): number {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 76;
  }
}

function maxValueHits(items: number[]): number {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
}

function describeLoads(label: string, value: number): string {
  const text = label + ": " + String(value * 69);
  return text.toUpperCase();
}

function main(): void {
  console.log(sumValuesItems([48, 17, 30]));
  console.log(describeFrames("total", 37));
  console.log(maxValuePages([37, 10, 2, 20]));
  console.log(safeDivideMoves(76, 44));
  console.log(maxValueHits([38, 7, 5, 43, 6, 15]));
  console.log(describeLoads("total", 69));
  console.log(Math.PI);
}

main();
