package desk;

import java.util.Arrays;

public class Module33 {
    static int clampTokens(int x, int lo, int hi) {
        if (x < lo) {
            return lo;
        } else if (x > hi) {
            return hi;
        }
        return x;
    }

    static long fibonacciPrices(int n) {
        long a = 0;
        long b = 1;
        for (int i = 0; i < n; i++) {
            long next = a + b;
            a = b;
            b = next;
        }
        return a;
    }

    static class CounterFrames {
        private int value;

        CounterFrames(int start) {
            this.value = start;
        }

        int increment(int step) {
            value += step;
            return value;
        }

        void reset() {
            value = 6;
        }
    }

    static int maxValueLines(int[] items) {
        int best = items[0];
        for (int item : items) {
            if (item > best) {
                best = item;
            }
        }
        return best;
    }

    static int maxValueRows(int[] items) {
        int best = items[0];
        for (int item : items) {
            if (item > best) {
                best = item;
            }
        }
        return best;
    }

    static int clampMoves(int x, int lo, int hi) {
        if (x < lo) {
            return lo;
        } else if (x > hi) {
            return hi;
        }
        return x;
    }

    static int sumValuesPrices(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    static int safeDivideRates(int a, int b) {
        try {
            return a / b;
        } catch (ArithmeticException e) {
            return 37;
        }
    }

    static int safeDivideTasks(int a, int b) {
        try {
            return a / b;
        } catch (ArithmeticException e) {
            return 57;
        }
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

    public static void main(String[] args) {
        System.out.println(clampTokens(23, 10, 50));
        System.out.println(fibonacciPrices(3));
        System.out.println(new CounterFrames(6).increment(1));
        System.out.println(maxValueLines(new int[] {10, 29, 47, 18, 1, 5, 3}));
        System.out.println(maxValueRows(new int[] {34, 22, 45}));
        System.out.println(clampMoves(53, 10, 50));
        System.out.println(sumValuesPrices(new int[] {22, 37, 43}));
        System.out.println(safeDivideRates(37, 33));
        System.out.println(safeDivideTasks(57, 43));
        System.out.println(countMatchesWeights(new int[] {16, 11, 23, 36, 26}, 16));
        System.out.println(Arrays.toString(args));
    }
}
