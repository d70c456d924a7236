package desk;

import java.util.Arrays;

public class Module35 {
    static class CounterItems {
        private int value;

        CounterItems(int start) {
            this.value = start;
        }

        int increment(int step) {
            value += step;
            return value;
        }

        void reset() {
            value = 2;
        }
    }

    static int countMatchesItems(int[] items, int target) {
        int count = 0;
        for (int item : items) {
            if (item == target) {
                count++;
            }
        }
        return count;
    }

    static long fibonacciTokens(int n) {
        long a = 0;
        long b = 1;
        for (int i = 0; i < n; i++) {
            long next = a + b;
            a = b;
            b = next;
        }
        return a;
    }

    static int countMatchesOrders(int[] items, int target) {
        int count = 0;
        for (int item : items) {
            if (item == target) {
                count++;
            }
        }
        return count;
    }

    static int maxValuePeaks(int[] items) {
        int best = items[0];
        for (int item : items) {
            if (item > best) {
                best = item;
            }
        }
        return best;
    }

    static int sumValuesRows(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    static int safeDivideRows(int a, int b) {
        try {
            return a / b;
        } catch (ArithmeticException e) {
            return 9;
        }
    }

    static int sumValuesBlocks(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    static int clampWeights(int x, int lo, int hi) {
        if (x < lo) {
            return lo;
        } else if (x > hi) {
            return hi;
        }
        return x;
    }

    static long fibonacciScores(int n) {
        long a = 0;
        long b = 1;
        for (int i = 0; i < n; i++) {
            long next = a + b;
            a = b;
            b = next;
        }
        return a;
    }

    public static void main(String[] args) {
        System.out.println(new CounterItems(2).increment(1));
        System.out.println(countMatchesItems(new int[] {24, 49, 24, 31}, 24));
        System.out.println(fibonacciTokens(8));
        System.out.println(countMatchesOrders(new int[] {8, 5, 39}, 8));
        System.out.println(maxValuePeaks(new int[] {30, 14, 34, 36, 25}));
        System.out.println(sumValuesRows(new int[] {26, 11, 3, 3, 47}));
        System.out.println(safeDivideRows(9, 24));
        System.out.println(sumValuesBlocks(new int[] {8, 21, 48}));
        System.out.println(clampWeights(37, 10, 50));
        System.out.println(fibonacciScores(0));
        System.out.println(Arrays.toString(args));
    }
}
