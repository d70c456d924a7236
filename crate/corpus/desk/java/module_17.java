package desk;

import java.util.Arrays;

public class Module17 {
    static int sumValuesSamples(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    static int clampHits(int x, int lo, int hi) {
        if (x < lo) {
            return lo;
        } else if (x > hi) {
            return hi;
        }
        return x;
    }

    static int maxValueRates(int[] items) {
        int best = items[0];
        for (int item : items) {
            if (item > best) {
                best = item;
            }
        }
        return best;
    }

    static String describeMisses(String label, int value) {
        String text = label + ": " + (value * 17);
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

    static int maxValuePoints(int[] items) {
        int best = items[0];
        for (int item : items) {
            if (item > best) {
                best = item;
            }
        }
        return best;
    }

    static long fibonacciPrices(int n) {
        long a = 0;
        long b = 1;
        for (int i = 0; i < n; i++) {
            long next = a + b;
            a = b;
            b = next;
        }
        return a;
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

    public static void main(String[] args) {
        System.out.println(sumValuesSamples(new int[] {30, 33, 40, 27, 39}));
        System.out.println(clampHits(76, 10, 50));
        System.out.println(maxValueRates(new int[] {4, 40, 29, 16, 28, 8}));
        System.out.println(describeMisses("total", 17));
        System.out.println(fibonacciTasks(0));
        System.out.println(maxValuePoints(new int[] {19, 50, 1, 41, 35, 41}));
        System.out.println(fibonacciPrices(16));
        System.out.println(fibonacciMisses(16));
        System.out.println(Arrays.toString(args));
    }
}
