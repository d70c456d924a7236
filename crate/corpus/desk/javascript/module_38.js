"use strict";

function sumValuesHits(items) {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function fibonacciUsers(n) {
  let a = 0;
  let b = 1;
  for (let i = 0; i < n; i++) {
    const next = a + b;
    a = b;
    b = next;
  }
  return a;
}

function countMatchesEvents(items, target) {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
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

function describeBids(label, value) {
  const text = label + ": " + String(value * 43);
  return text.toUpperCase();
}

function main() {
  console.log(sumValuesHits([46, 29, 48, 9, 2, 2]));
  console.log(fibonacciUsers(18));
  console.log(countMatchesEvents([22, 25, 47, 30, 20, 4], 22));
  console.log(maxValueWeights([14, 11, 41, 14, 15, 28]));
  console.log(describeBids("total", 43));
  console.log(Math.PI);
}

main();
