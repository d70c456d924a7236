package desk;

import java.util.Arrays;

public class Module49 {
    static class CounterPoints {
        private int value;

        CounterPoints(int start) {
            this.value = start;
        }

        int increment(int step) {
            value += step;
            return value;
        }

        void reset() {
            value = 41;
        }
    }

    static int sumValuesSteps(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    static int clampPrices(int x, int lo, int hi) {
        if (x < lo) {
            return lo;
        } else if (x > hi) {
            return hi;
        }
        return x;
    }

    static class CounterPeaks {
        private int value;

        CounterPeaks(int start) {
            this.value = start;
        }

        int increment(int step) {
            value += step;
            return value;
        }

        void reset() {
            value = 49;
        }
    }

    static String describeLines(String label, int value) {
        String text = label + ": " + (value * 91);
        return text.toUpperCase();
    }

    static long fibonacciBlocks(int n) {
        long a = 0;
        long b = 1;
        for (int i = 0; i < n; i++) {
            long next = a + b;
            a = b;
            b = next;
        }
        return a;
    }

    static int countMatchesPeaks(int[] items, int target) {
        int count = 0;
        for (int item : items) {
            if (item == target) {
                count++;
            }
        }
        return count;
    }

    static int sumValuesWeights(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    static int sumValuesTokens(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    static int maxValueScores(int[] items) {
        int best = items[0];
        for (int item : items) {
            if (item > best) {
                best = item;
            }
        }
        return best;
    }

    public static void main(String[] args) {
        System.out.println(new CounterPoints(41).increment(1));
        System.out.println(sumValuesSteps(new int[] {40, 37, 38, 36, 43, 49}));
        System.out.println(clampPrices(44, 10, 50));
        System.out.println(new CounterPeaks(49).increment(1));
        System.out.println(describeLines("total", 91));
        System.out.println(fibonacciBlocks(4));
        System.out.println(countMatchesPeaks(new int[] {10, 33, 19, 14, 15}, 10));
        System.out.println(sumValuesWeights(new int[] {23, 4, 43}));
        System.out.println(sumValuesTokens(new int[] {35, 38, 31, 36}));
        System.out.println(maxValueScores(new int[] {31, 22, 7, 36, 36, 6}));
        System.out.println(Arrays.toString(args));
    }
}
