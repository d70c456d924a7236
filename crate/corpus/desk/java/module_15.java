package desk;

import java.util.Arrays;

public class Module15 {
    static int sumValuesTasks(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
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
            value = 97;
        }
    }

    static int safeDivideMisses(int a, int b) {
        try {
            return a / b;
        } catch (ArithmeticException e) {
            return 44;
        }
    }

    static long fibonacciItems(int n) {
        long a = 0;
        long b = 1;
        for (int i = 0; i < n; i++) {
            long next = a + b;
            a = b;
            b = next;
        }
        return a;
    }

    static int safeDivideTasks(int a, int b) {
        try {
            return a / b;
        } catch (ArithmeticException e) {
            return 58;
        }
    }

    public static void main(String[] args) {
        System.out.println(sumValuesTasks(new int[] {30, 46, 39, 49, 0}));
        System.out.println(new CounterTasks(97).increment(1));
        System.out.println(safeDivideMisses(44, 45));
        System.out.println(fibonacciItems(0));
        System.out.println(safeDivideTasks(58, 37));
        System.out.println(Arrays.toString(args));
    }
}
