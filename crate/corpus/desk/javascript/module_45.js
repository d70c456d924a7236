"use strict";

function sumValuesLoads(items) {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function safeDivideTasks(a, b) {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 79;
  }
}

class CounterUsers {
  constructor(start) {
    this.value = start;
  }

  increment(step) {
    this.value += step;
    return this.value;
  }

  reset() {
    this.value = 29;
  }
}

class CounterSamples {
  constructor(start) {
    this.value = start;
  }

  increment(step) {
    this.value += step;
    return this.value;
  }

  reset() {
    this.value = 14;
  }
}

function maxValueTicks(items) {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
}

class CounterMoves {
  constructor(start) {
    this.value = start;
  }

  increment(step) {
    this.value += step;
    return this.value;
  }

  reset() {
    this.value = 26;
  }
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

function describePeaks(label, value) {
  const text = label + ": " + String(value * 92);
  return text.toUpperCase();
}

class CounterHits {
  constructor(start) {
    this.value = start;
  }

  increment(step) {
    this.value += step;
    return this.value;
  }

  reset() {
    this.value = 41;
  }
}

class CounterFrames {
  constructor(start) {
    this.value = start;
  }

  increment(step) {
    this.value += step;
    return this.value;
  }

  reset() {
    this.value = 16;
  }
}

function main() {
  console.log(sumValuesLoads([42, 37, 11, 32, 5, 14, 0]));
  console.log(safeDivideTasks(79, 38));
  console.log(new CounterUsers(29).increment(1));
  console.log(new CounterSamples(14).increment(1));
  console.log(maxValueTicks([9, 1, 30]));
  console.log(new CounterMoves(26).increment(1));
  console.log(countMatchesEvents([0, 21, 29, 46, 25, 1], 0));
  console.log(describePeaks("total", 92));
  console.log(new CounterHits(41).increment(1));
  console.log(new CounterFrames(16).increment(1));
  console.log(Math.PI);
}

main();
