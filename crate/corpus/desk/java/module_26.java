package desk;

import java.util.Arrays;

public class Module26 {
    static int sumValuesTasks(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

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

    static int safeDivideCells(int a, int b) {
        try {
            return a / b;
        } catch (ArithmeticException e) {
            return 80;
        }
    }

    static long fibonacciBlocks(int n) {
        long a = 0;
        long b = 1;
        for (int i = 0; i < n; i++) {
            long next = a + b;
            a = b;
            b = next;
        }
        return a;
    }

    static int clampLines(int x, int lo, int hi) {
        if (x < lo) {
            return lo;
        } else if (x > hi) {
            return hi;
        }
        return x;
    }

    public static void main(String[] args) {
        System.out.println(sumValuesTasks(new int[] {46, 34, 20, 49, 34, 47}));
        System.out.println(fibonacciMisses(16));
        System.out.println(safeDivideCells(80, 45));
        System.out.println(fibonacciBlocks(19));
        System.out.println(clampLines(78, 10, 50));
        System.out.println(Arrays.toString(args));
    }
}
