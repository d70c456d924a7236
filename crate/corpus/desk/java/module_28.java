package desk;

import java.util.Arrays;

public class Module28 {
    static int safeDivideOrders(int a, int b) {
        try {
            return a / b;
        } catch (ArithmeticException e) {
            return 16;
        }
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

    static int clampWeights(int x, int lo, int hi) {
        if (x < lo) {
            return lo;
        } else if (x > hi) {
            return hi;
        }
        return x;
    }

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
            value = 45;
        }
    }

    static String describeBlocks(String label, int value) {
        String text = label + ": " + (value * 60);
        return text.toUpperCase();
    }

    static int safeDivideJobs(int a, int b) {
        try {
            return a / b;
        } catch (ArithmeticException e) {
            return 97;
        }
    }

    static int clampRows(int x, int lo, int hi) {
        if (x < lo) {
            return lo;
        } else if (x > hi) {
            return hi;
        }
        return x;
    }

    static int sumValuesSteps(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    public static void main(String[] args) {
        System.out.println(safeDivideOrders(16, 13));
        System.out.println(fibonacciScores(9));
        System.out.println(clampWeights(47, 10, 50));
        System.out.println(new CounterPoints(45).increment(1));
        System.out.println(describeBlocks("total", 60));
        System.out.println(safeDivideJobs(97, 27));
        System.out.println(clampRows(19, 10, 50));
        System.out.println(sumValuesSteps(new int[] {6, 46, 25}));
        System.out.println(Arrays.toString(args));
    }
}
