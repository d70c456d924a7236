package desk;

import java.util.Arrays;

public class Module40 {
    static int countMatchesCells(int[] items, int target) {
        int count = 0;
        for (int item : items) {
            if (item == target) {
                count++;
            }
        }
        return count;
    }

    static int clampTicks(int x, int lo, int hi) {
        if (x < lo) {
            return lo;
        } else if (x > hi) {
            return hi;
        }
        return x;
    }

    static String describeTokens(String label, int value) {
        String text = label + ": " + (value * 93);
        return text.toUpperCase();
    }

    static long fibonacciTasks(int n) {
        long a = 0;
        long b = 1;
        for (int i = 0; i < n; i++) {
            long next = a + b;
            a = b;
            b = next;
        }
        return a;
    }

    static int sumValuesBids(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    static long fibonacciSteps(int n) {
        long a = 0;
        long b = 1;
        for (int i = 0; i < n; i++) {
            long next = a + b;
            a = b;
            b = next;
        }
        return a;
    }

    static String describeBytes(String label, int value) {
        String text = label + ": " + (value * 93);
        return text.toUpperCase();
    }

    public static void main(String[] args) {
        System.out.println(countMatchesCells(new int[] {38, 42, 24, 47}, 38));
        System.out.println(clampTicks(32, 10, 50));
        System.out.println(describeTokens("total", 93));
        System.out.println(fibonacciTasks(6));
        System.out.println(sumValuesBids(new int[] {45, 29, 3, 33, 41}));
        System.out.println(fibonacciSteps(17));
        System.out.println(describeBytes("total", 93));
        System.out.println(Arrays.toString(args));
    }
}
