package desk;

import java.util.Arrays;

public class Module12 {
    static int countMatchesEvents(int[] items, int target) {
        int count = 0;
        for (int item : items) {
            if (item == target) {
                count++;
            }
        }
        return count;
    }

    static int countMatchesVotes(int[] items, int target) {
        int count = 0;
        for (int item : items) {
            if (item == target) {
                count++;
            }
        }
        return count;
    }

    static int safeDivideVotes(int a, int b) {
        try {
            return a / b;
        } catch (ArithmeticException e) {
            return 63;
        }
    }

    static int clampRates(int x, int lo, int hi) {
        if (x < lo) {
            return lo;
        } else if (x > hi) {
            return hi;
        }
        return x;
    }

    static int sumValuesWeights(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    static String describeTokens(String label, int value) {
        String text = label + ": " + (value * 66);
        return text.toUpperCase();
    }

    static long fibonacciRates(int n) {
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
        System.out.println(countMatchesEvents(new int[] {37, 12, 41, 9, 28, 26, 0}, 37));
        System.out.println(countMatchesVotes(new int[] {30, 39, 14}, 30));
        System.out.println(safeDivideVotes(63, 10));
        System.out.println(clampRates(18, 10, 50));
        System.out.println(sumValuesWeights(new int[] {45, 4, 32, 3, 14}));
        System.out.println(describeTokens("total", 66));
        System.out.println(fibonacciRates(9));
        System.out.println(Arrays.toString(args));
    }
}
