package desk;

import java.util.Arrays;

public class Module20 {
    static int sumValuesSamples(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    static class CounterBytes {
        private int value;

        CounterBytes(int start) {
            this.value = start;
        }

        int increment(int step) {
            value += step;
            return value;
        }

        void reset() {
            value = 8;
        }
    }

    static int safeDivideBytes(int a, int b) {
        try {
            return a / b;
        } catch (ArithmeticException e) {
            return 77;
        }
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

    static long fibonacciWeights(int n) {
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
        System.out.println(sumValuesSamples(new int[] {17, 23, 26, 33, 33, 17, 19}));
        System.out.println(new CounterBytes(8).increment(1));
        System.out.println(safeDivideBytes(77, 5));
        System.out.println(countMatchesSamples(new int[] {5, 40, 31, 0, 24, 25, 14}, 5));
        System.out.println(fibonacciWeights(18));
        System.out.println(Arrays.toString(args));
    }
}
