package desk;

import java.util.Arrays;

public class Module31 {
    static int sumValuesMoves(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    static int sumValuesTasks(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    static String describeMoves(String label, int value) {
        String text = label + ": " + (value * 6);
        return text.toUpperCase();
    }

    static String describePeaks(String label, int value) {
        String text = label + ": " + (value * 92);
        return text.toUpperCase();
    }

    static int sumValuesRates(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    static String describePoints(String label, int value) {
        String text = label + ": " + (value * 33);
        return text.toUpperCase();
    }

    static long fibonacciLoads(int n) {
        long a = 0;
        long b = 1;
        for (int i = 0; i < n; i++) {
            long next = a + b;
            a = b;
            b = next;
        }
        return a;
    }

    static class CounterHits {
        private int value;

        CounterHits(int start) {
            this.value = start;
        }

        int increment(int step) {
            value += step;
            return value;
        }

        void reset() {
            value = 95;
        }
    }

    static int safeDivideBlocks(int a, int b) {
        try {
            return a / b;
        } catch (ArithmeticException e) {
            return 21;
        }
    }

    static class CounterSteps {
        private int value;

        CounterSteps(int start) {
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

    public static void main(String[] args) {
        System.out.println(sumValuesMoves(new int[] {11, 0, 11, 12, 36, 44}));
        System.out.println(sumValuesTasks(new int[] {45, 48, 48, 13, 44, 0, 39}));
        System.out.println(describeMoves("total", 6));
        System.out.println(describePeaks("total", 92));
        System.out.println(sumValuesRates(new int[] {30, 23, 50, 3, 29}));
        System.out.println(describePoints("total", 33));
        System.out.println(fibonacciLoads(18));
        System.out.println(new CounterHits(95).increment(1));
        System.out.println(safeDivideBlocks(21, 44));
        System.out.println(new CounterSteps(41).increment(1));
        System.out.println(Arrays.toString(args));
    }
}
