package desk;

import java.util.Arrays;

public class Module23 {
    static class CounterTokens {
        private int value;

        CounterTokens(int start) {
            this.value = start;
        }

        int increment(int step) {
            value += step;
            return value;
        }

        void reset() {
            value = 48;
        }
    }

    static class CounterRows {
        private int value;

        CounterRows(int start) {
            this.value = start;
        }

        int increment(int step) {
            value += step;
            return value;
        }

        void reset() {
            value = 61;
        }
    }

    static int countMatchesTicks(int[] items, int target) {
        int count = 0;
        for (int item : items) {
            if (item == target) {
                count++;
            }
        }
        return count;
    }

    static int safeDivideLines(int a, int b) {
        try {
            return a / b;
        } catch (ArithmeticException e) {
            return 61;
        }
    }

    static long fibonacciPages(int n) {
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

    static int safeDividePrices(int a, int b) {
        try {
            return a / b;
        } catch (ArithmeticException e) {
            return 30;
        }
    }

    static String describeHits(String label, int value) {
        String text = label + ": " + (value * 30);
        return text.toUpperCase();
    }

    public static void main(String[] args) {
        System.out.println(new CounterTokens(48).increment(1));
        System.out.println(new CounterRows(61).increment(1));
        System.out.println(countMatchesTicks(new int[] {6, 21, 16, 20}, 6));
        System.out.println(safeDivideLines(61, 47));
        System.out.println(fibonacciPages(16));
        System.out.println(sumValuesPages(new int[] {12, 21, 40, 41, 48, 14}));
        System.out.println(safeDividePrices(30, 24));
        System.out.println(describeHits("total", 30));
        System.out.println(Arrays.toString(args));
    }
}
