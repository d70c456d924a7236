package desk;

import java.util.Arrays;

public class Module48 {
    static long fibonacciVotes(int n) {
        long a = 0;
        long b = 1;
        for (int i = 0; i < n; i++) {
            long next = a + b;
            a = b;
            b = next;
        }
        return a;
    }

    static int countMatchesLevels(int[] items, int target) {
        int count = 0;
        for (int item : items) {
            if (item == target) {
                count++;
            }
        }
        return count;
    }

    static int clampSamples(int x, int lo, int hi) {
        if (x < lo) {
            return lo;
        } else if (x > hi) {
            return hi;
        }
        return x;
    }

    static int sumValuesPoints(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    static int maxValueOrders(int[] items) {
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

    static int clampPages(int x, int lo, int hi) {
        if (x < lo) {
            return lo;
        } else if (x > hi) {
            return hi;
        }
        return x;
    }

    public static void main(String[] args) {
        System.out.println(fibonacciVotes(12));
        System.out.println(countMatchesLevels(new int[] {28, 48, 13, 18}, 28));
        System.out.println(clampSamples(3, 10, 50));
        System.out.println(sumValuesPoints(new int[] {31, 15, 16, 42}));
        System.out.println(maxValueOrders(new int[] {18, 6, 46, 47, 49, 17, 7}));
        System.out.println(fibonacciPrices(6));
        System.out.println(clampPages(72, 10, 50));
        System.out.println(Arrays.toString(args));
    }
}
