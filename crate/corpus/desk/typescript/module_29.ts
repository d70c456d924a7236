"use strict";

function sumValuesRows(items: number[]): number {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function countMatchesTicks(items: number[], target: number): number {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
}

function safeDivideOrders(a: number, b: number): number {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 21;
  }
}

function fibonacciTasks(n: number): number {
  let a = 0;
  let b = 1;
  for (let i = 0; i < n; i++) {
    const next = a + b;
    a = b;
    b = next;
  }
  return a;
}

function safeDivideLines(a: number, b: number): number {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 70;
  }
}

function describeRates(label: string, value: number): string {
  const text = label + ": " + String(value * 2);
  return text.toUpperCase();
}

function maxValuePrices(items: number[]): number {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
}

function fibonacciPeaks(n: number): number {
  let a = 0;
  let b = 1;
  for (let i = 0; i < n; i++) {
    const next = a + b;
    a = b;
    b = next;
  }
  return a;
}

function describeItems(label: string, value: number): string {
  const text = label + ": " + String(value * 11);
  return text.toUpperCase();
}

function main(): void {
  console.log(sumValuesRows([30, 20, 32, 28, 45, 7, 31]));
  console.log(countMatchesTicks([1, 44, 0, 21, 8], 1));
  console.log(safeDivideOrders(21, 34));
  console.log(fibonacciTasks(14));
  console.log(safeDivideLines(70, 41));
  console.log(describeRates("total", 2));
  console.log(maxValuePrices([13, 50, 32, 43, 39]));
  console.log(fibonacciPeaks(8));
  console.log(describeItems("total", 11));
  console.log(Math.PI);
}

main();
