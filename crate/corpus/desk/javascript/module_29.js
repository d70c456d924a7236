"use strict";

function sumValuesRows(items) {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
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

function safeDivideOrders(a, b) {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 21;
  }
}

function fibonacciTasks(n) {
  let a = 0;
  let b = 1;
  for (let i = 0; i < n; i++) {
    const next = a + b;
    a = b;
    b = next;
  }
  return a;
}

function safeDivideLines(a, b) {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 70;
  }
}

function describeRates(label, value) {
  const text = label + ": " + String(value * 2);
  return text.toUpperCase();
}

function maxValuePrices(items) {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
}

function fibonacciPeaks(n) {
  let a = 0;
  let b = 1;
  for (let i = 0; i < n; i++) {
    const next = a + b;
    a = b;
    b = next;
  }
  return a;
}

function describeItems(label, value) {
  const text = label + ": " + String(value * 11);
  return text.toUpperCase();
}

function main() {
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
