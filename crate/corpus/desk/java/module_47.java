package desk;

import java.util.Arrays;

public class Module47 {
    static int sumValuesHits(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    static int safeDividePoints(int a, int b) {
        try {
            return a / b;
        } catch (ArithmeticException e) {
            return 71;
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

    static class CounterPages {
        private int value;

        CounterPages(int start) {
            this.value = start;
        }

        int increment(int step) {
            value += step;
            return value;
        }

        void reset() {
            value = 71;
        }
    }

    static int safeDivideTicks(int a, int b) {
        try {
            return a / b;
        } catch (ArithmeticException e) {
            return 11;
        }
    }

    public static void main(String[] args) {
        System.out.println(sumValuesHits(new int[] {34, 15, 9, 7, 4}));
        System.out.println(safeDividePoints(71, 43));
        System.out.println(fibonacciPages(19));
        System.out.println(new CounterPages(71).increment(1));
        System.out.println(safeDivideTicks(11, 19));
        System.out.println(Arrays.toString(args));
    }
}
