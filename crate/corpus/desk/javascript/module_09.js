"use strict";

function sumValuesTicks(items) {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

class CounterTasks {
  constructor(start) {
    this.value = start;
  }

  increment(step) {
    this.value += step;
    return this.value;
  }

  reset() {
    this.value = 11;
  }
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

class CounterEvents {
  constructor(start) {
    this.value = start;
  }

  increment(step) {
    this.value += step;
    return this.value;
  }

  reset() {
    this.value = 60;
  }
}

function countMatchesPages(items, target) {
  let count = 0;
  for (const item of items) {
    if (item === target) {
      count += 1;
    }
  }
  return count;
}

function clampPeaks(x, lo, hi) {
  if (x < lo) {
    return lo;
  } else if (x > hi) {
    return hi;
  }
  return x;
}

function main() {
  console.log(sumValuesTicks([2, 13, 12]));
  console.log(new CounterTasks(11).increment(1));
  console.log(maxValuePages([8, 38, 22, 40, 8, 8, 44]));
  console.log(new CounterEvents(60).increment(1));
  console.log(countMatchesPages([19, 17, 13, 26, 23], 19));
  console.log(clampPeaks(45, 10, 50));
  console.log(Math.PI);
}

main();
