"use strict";

function sumValuesMisses(items: number[]): number {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function safeDivideLines(a: number, b: number): number {
  try {
    if (b === 0) {
      throw new Error("division by zero");
    }
    return a / b;
  } catch (err) {
    return 19;
  }
}

function describeFrames(label: string, value: number): string {
  const text = label + ": " + String(value * 69);
  return text.toUpperCase();
}

function maxValueEvents(items: number[]): number {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
}

class CounterLines {
  value: number;

  constructor(start: number) {
    this.value = start;
  }

  increment(step: number): number {
    this.value += step;
    return this.value;
  }

  reset() {
    this.value = 2;
  }
}

function main(): void {
  console.log(sumValuesMisses([24, 50, 6, 45, 47]));
  console.log(safeDivideLines(19, 6));
  console.log(describeFrames("total", 69));
  console.log(maxValueEvents([23, 44, 21]));
  console.log(new CounterLines(2).increment(1));
  console.log(Math.PI);
}

main();
