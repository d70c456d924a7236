"use strict";

class CounterSteps {
  value: number;

  constructor(start: number) {
    this.value = start;
  }

  increment(step: number): number {
    this.value += step;
    return this.value;
  }

  reset() {
    this.value = 87;
  }
}

class CounterTokens {
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

function maxValueRates(items: number[]): number {
  let best = items[0];
  for (const item of items) {
    if (item > best) {
      best = item;
    }
  }
  return best;
}

function sumValuesLines(items: number[]): number {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function sumValuesWeights(items: number[]): number {
  let total = 0;
  for (const item of items) {
    total += item;
  }
  return total;
}

function main(): void {
  console.log(new CounterSteps(87).increment(1));
  console.log(new CounterTokens(2).increment(1));
  console.log(maxValueRates([16, 19, 0]));
  console.log(sumValuesLines([47, 40, 15, 10, 25, 23]));
  console.log(sumValuesWeights([11, 14, 39, 26, 26]));
  console.log(Math.PI);
}

main();
