package desk;

import java.util.Arrays;

public class Module05 {
    static int sumValuesSteps(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    static int safeDivideTokens(int a, int b) {
        try {
            return a / b;
        } catch (ArithmeticException e) {
            return 7;
        }
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

    static String describePeaks(String label, int value) {
        String text = label + ": " + (value * 62);
        return text.toUpperCase();
    }

    static int countMatchesLines(int[] items, int target) {
        int count = 0;
        for (int item : items) {
            if (item == target) {
                count++;
            }
        }
        return count;
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
            value = 78;
        }
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

    static String describeBlocks(String label, int value) {
        String text = label + ": " + (value * 74);
        return text.toUpperCase();
    }

    public static void main(String[] args) {
        System.out.println(sumValuesSteps(new int[] {42, 42, 37}));
        System.out.println(safeDivideTokens(7, 49));
        System.out.println(fibonacciRows(11));
        System.out.println(describePeaks("total", 62));
        System.out.println(countMatchesLines(new int[] {3, 17, 50, 43, 42, 19, 17}, 3));
        System.out.println(new CounterBytes(78).increment(1));
        System.out.println(maxValuePoints(new int[] {39, 25, 18, 35, 23}));
        System.out.println(describeBlocks("total", 74));
        System.out.println(Arrays.toString(args));
    }
}
