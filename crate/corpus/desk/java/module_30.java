package desk;

import java.util.Arrays;

public class Module30 {
    static int sumValuesSamples(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    static int countMatchesWeights(int[] items, int target) {
        int count = 0;
        for (int item : items) {
            if (item == target) {
                count++;
            }
        }
        return count;
    }

    static int clampCells(int x, int lo, int hi) {
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
            value = 33;
        }
    }

    static int safeDivideVotes(int a, int b) {
        try {
            return a / b;
        } catch (ArithmeticException e) {
            return 42;
        }
    }

    public static void main(String[] args) {
        System.out.println(sumValuesSamples(new int[] {42, 9, 12, 0, 37, 9}));
        System.out.println(countMatchesWeights(new int[] {48, 49, 23, 27, 44}, 48));
        System.out.println(clampCells(57, 10, 50));
        System.out.println(new CounterPeaks(33).increment(1));
        System.out.println(safeDivideVotes(42, 28));
        System.out.println(Arrays.toString(args));
    }
}
