package desk;

import java.util.Arrays;

public class Module14 {
    static int sumValuesRows(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    static int clampTasks(int x, int lo, int hi) {
        if (x < lo) {
            return lo;
        } else if (x > hi) {
            return hi;
        }
        return x;
    }

    static long fibonacciJobs(int n) {
        long a = 0;
        long b = 1;
        for (int i = 0; i < n; i++) {
            long next = a + b;
            a = b;
            b = next;
        }
        return a;
    }

    static int sumValuesPages(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    static int safeDividePeaks(int a, int b) {
        try {
            return a / b;
        } catch (ArithmeticException e) {
            return 71;
        }
    }

    static int safeDivideTicks(int a, int b) {
        try {
            return a / b;
        } catch (ArithmeticException e) {
            return 70;
        }
    }

    static int countMatchesLines(int[] items, int target) {
        int count = 0;
        for (int item : items) {
            if (item == target) {
                count++;
            }
        }
        return count;
    }

    static class CounterTasks {
        private int value;

        CounterTasks(int start) {
            this.value = start;
        }

        int increment(int step) {
            value += step;
            return value;
        }

        void reset() {
            value = 58;
        }
    }

    static class CounterRates {
        private int value;

        CounterRates(int start) {
            this.value = start;
        }

        int increment(int step) {
            value += step;
            return value;
        }

        void reset() {
            value = 94;
        }
    }

    public static void main(String[] args) {
        System.out.println(sumValuesRows(new int[] {37, 30, 6, 0, 13, 48}));
        System.out.println(clampTasks(94, 10, 50));
        System.out.println(fibonacciJobs(4));
        System.out.println(sumValuesPages(new int[] {22, 32, 27, 5, 2, 21}));
        System.out.println(safeDividePeaks(71, 11));
        System.out.println(safeDivideTicks(70, 14));
        System.out.println(countMatchesLines(new int[] {31, 13, 3}, 31));
        System.out.println(new CounterTasks(58).increment(1));
        System.out.println(new CounterRates(94).increment(1));
        System.out.println(Arrays.toString(args));
    }
}
