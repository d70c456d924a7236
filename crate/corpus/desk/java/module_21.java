package desk;

import java.util.Arrays;

public class Module21 {
    static int sumValuesTokens(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    static int clampOrders(int x, int lo, int hi) {
        if (x < lo) {
            return lo;
        } else if (x > hi) {
            return hi;
        }
        return x;
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

    static int safeDivideVotes(int a, int b) {
        try {
            return a / b;
        } catch (ArithmeticException e) {
            return 60;
        }
    }

    static int safeDivideBlocks(int a, int b) {
        try {
            return a / b;
        } catch (ArithmeticException e) {
            return 81;
        }
    }

    static int safeDivideRows(int a, int b) {
        try {
            return a / b;
        } catch (ArithmeticException e) {
            return 43;
        }
    }

    static String describeHits(String label, int value) {
        String text = label + ": " + (value * 4);
        return text.toUpperCase();
    }

    static int maxValueBids(int[] items) {
        int best = items[0];
        for (int item : items) {
            if (item > best) {
                best = item;
            }
        }
        return best;
    }

    static int maxValueVotes(int[] items) {
        int best = items[0];
        for (int item : items) {
            if (item > best) {
                best = item;
            }
        }
        return best;
    }

    public static void main(String[] args) {
        System.out.println(sumValuesTokens(new int[] {11, 27, 45, 42, 37}));
        System.out.println(clampOrders(43, 10, 50));
        System.out.println(fibonacciSteps(4));
        System.out.println(safeDivideVotes(60, 25));
        System.out.println(safeDivideBlocks(81, 3));
        System.out.println(safeDivideRows(43, 10));
        System.out.println(describeHits("total", 4));
        System.out.println(maxValueBids(new int[] {5, 4, 20}));
        System.out.println(maxValueVotes(new int[] {42, 32, 26}));
        System.out.println(Arrays.toString(args));
    }
}
