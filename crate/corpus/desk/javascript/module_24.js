"use strict";

function sumValuesMisses(items) {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function safeDivideLines(a, b) {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 19;
  }
}

function describeFrames(label, value) {
  const text = label + ": " + String(value * 69);
  return text.toUpperCase();
}

function maxValueEvents(items) {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
}

class CounterLines {
  constructor(start) {
    this.value = start;
  }

  increment(step) {
    this.value += step;
    return this.value;
  }

  reset() {
    this.value = 2;
  }
}

function main() {
  console.log(sumValuesMisses([24, 50, 6, 45, 47]));
  console.log(safeDivideLines(19, 6));
  console.log(describeFrames("total", 69));
  console.log(maxValueEvents([23, 44, 21]));
  console.log(new CounterLines(2).increment(1));
  console.log(Math.PI);
}

main();
