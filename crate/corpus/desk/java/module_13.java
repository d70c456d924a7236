package desk;

import java.util.Arrays;

public class Module13 {
    static long fibonacciOrders(int n) {
        long a = 0;
        long b = 1;
        for (int i = 0; i < n; i++) {
            long next = a + b;
            a = b;
            b = next;
        }
        return a;
    }

    static int countMatchesScores(int[] items, int target) {
        int count = 0;
        for (int item : items) {
            if (item == target) {
                count++;
            }
        }
        return count;
    }

    static int sumValuesVotes(int[] items) {
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
            return 87;
        }
    }

    static int sumValuesRates(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    static int safeDivideLoads(int a, int b) {
        try {
            return a / b;
        } catch (ArithmeticException e) {
            return 39;
        }
    }

    static int clampMisses(int x, int lo, int hi) {
        if (x < lo) {
            return lo;
        } else if (x > hi) {
            return hi;
        }
        return x;
    }

    static long fibonacciRows(int n) {
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
        System.out.println(fibonacciOrders(3));
        System.out.println(countMatchesScores(new int[] {18, 47, 48, 43, 10}, 18));
        System.out.println(sumValuesVotes(new int[] {40, 43, 47, 50, 12}));
        System.out.println(safeDividePoints(87, 25));
        System.out.println(sumValuesRates(new int[] {32, 45, 11, 4, 44, 40}));
        System.out.println(safeDivideLoads(39, 18));
        System.out.println(clampMisses(87, 10, 50));
        System.out.println(fibonacciRows(14));
        System.out.println(Arrays.toString(args));
    }
}
