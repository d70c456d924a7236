package desk;

import java.util.Arrays;

public class Module11 {
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

    static int sumValuesBlocks(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    static int safeDivideBlocks(int a, int b) {
        try {
            return a / b;
        } catch (ArithmeticException e) {
            return 74;
        }
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
            value = 35;
        }
    }

    static int safeDivideBids(int a, int b) {
        try {
            return a / b;
        } catch (ArithmeticException e) {
            return 94;
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
            value = 41;
        }
    }

    public static void main(String[] args) {
        System.out.println(fibonacciMisses(15));
        System.out.println(sumValuesBlocks(new int[] {39, 7, 22, 13, 5, 27}));
        System.out.println(safeDivideBlocks(74, 30));
        System.out.println(countMatchesOrders(new int[] {33, 34, 10, 45, 47}, 33));
        System.out.println(new CounterPoints(35).increment(1));
        System.out.println(safeDivideBids(94, 9));
        System.out.println(new CounterRows(41).increment(1));
        System.out.println(Arrays.toString(args));
    }
}
