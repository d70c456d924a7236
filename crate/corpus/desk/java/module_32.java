package desk;

import java.util.Arrays;

public class Module32 {
    static int safeDividePeaks(int a, int b) {
        try {
            return a / b;
        } catch (ArithmeticException e) {
            return 48;
        }
    }

    static int countMatchesBytes(int[] items, int target) {
        int count = 0;
        for (int item : items) {
            if (item == target) {
                count++;
            }
        }
        return count;
    }

    static String describeBids(String label, int value) {
        String text = label + ": " + (value * 35);
        return text.toUpperCase();
    }

    static int clampBytes(int x, int lo, int hi) {
        if (x < lo) {
            return lo;
        } else if (x > hi) {
            return hi;
        }
        return x;
    }

    static class CounterPrices {
        private int value;

        CounterPrices(int start) {
            this.value = start;
        }

        int increment(int step) {
            value += step;
            return value;
        }

        void reset() {
            value = 42;
        }
    }

    static long fibonacciMisses(int n) {
        long a = 0;
        long b = 1;
        for (int i = 0; i < n; i++) {
            long next = a + b;
            a = b;
            b = next;
        }
        return a;
    }

    static int clampEvents(int x, int lo, int hi) {
        if (x < lo) {
            return lo;
        } else if (x > hi) {
            return hi;
        }
        return x;
    }

    static int sumValuesWeights(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    public static void main(String[] args) {
        System.out.println(safeDividePeaks(48, 12));
        System.out.println(countMatchesBytes(new int[] {23, 16, 33, 1, 46, 2, 36}, 23));
        System.out.println(describeBids("total", 35));
        System.out.println(clampBytes(6, 10, 50));
        System.out.println(new CounterPrices(42).increment(1));
        System.out.println(fibonacciMisses(10));
        System.out.println(clampEvents(51, 10, 50));
        System.out.println(sumValuesWeights(new int[] {30, 22, 15, 0, 47, 26, 15}));
        System.out.println(Arrays.toString(args));
    }
}
