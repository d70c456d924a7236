package desk;

import java.util.Arrays;

public class Module02 {
    static int sumValuesMisses(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    static int clampOrders(int x, int lo, int hi) {
        if (x < lo) {
            return lo;
        } else if (x > hi) {
            return hi;
        }
        return x;
    }

    static int countMatchesSamples(int[] items, int target) {
        int count = 0;
        for (int item : items) {
            if (item == target) {
                count++;
            }
        }
        return count;
    }

    static int countMatchesPages(int[] items, int target) {
        int count = 0;
        for (int item : items) {
            if (item == target) {
                count++;
            }
        }
        return count;
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

    static class CounterLevels {
        private int value;

        CounterLevels(int start) {
            this.value = start;
        }

        int increment(int step) {
            value += step;
            return value;
        }

        void reset() {
            value = 78;
        }
    }

    static int countMatchesTokens(int[] items, int target) {
        int count = 0;
        for (int item : items) {
            if (item == target) {
                count++;
            }
        }
        return count;
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

    static int safeDividePrices(int a, int b) {
        try {
            return a / b;
        } catch (ArithmeticException e) {
            return 28;
        }
    }

    public static void main(String[] args) {
        System.out.println(sumValuesMisses(new int[] {14, 50, 2, 26}));
        System.out.println(clampOrders(74, 10, 50));
        System.out.println(countMatchesSamples(new int[] {5, 33, 37, 41, 44}, 5));
        System.out.println(countMatchesPages(new int[] {44, 4, 6, 27, 45}, 44));
        System.out.println(fibonacciScores(4));
        System.out.println(new CounterLevels(78).increment(1));
        System.out.println(countMatchesTokens(new int[] {5, 48, 27}, 5));
        System.out.println(maxValueScores(new int[] {31, 17, 1}));
        System.out.println(safeDividePrices(28, 45));
        System.out.println(Arrays.toString(args));
    }
}
