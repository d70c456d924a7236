package desk;

import java.util.Arrays;

public class Module18 {
    static int sumValuesTokens(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
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

    static int clampTicks(int x, int lo, int hi) {
        if (x < lo) {
            return lo;
        } else if (x > hi) {
            return hi;
        }
        return x;
    }

    static String describeOrders(String label, int value) {
        String text = label + ": " + (value * 48);
        return text.toUpperCase();
    }

    static int clampSamples(int x, int lo, int hi) {
        if (x < lo) {
            return lo;
        } else if (x > hi) {
            return hi;
        }
        return x;
    }

    static int countMatchesWeights(int[] items, int target) {
        int count = 0;
        for (int item : items) {
            if (item == target) {
                count++;
            }
        }
        return count;
    }

    static int safeDivideItems(int a, int b) {
        try {
            return a / b;
        } catch (ArithmeticException e) {
            return 23;
        }
    }

    static int clampCells(int x, int lo, int hi) {
        if (x < lo) {
            return lo;
        } else if (x > hi) {
            return hi;
        }
        return x;
    }

    public static void main(String[] args) {
        System.out.println(sumValuesTokens(new int[] {49, 34, 43, 11, 9, 37}));
        System.out.println(maxValueVotes(new int[] {27, 9, 38, 38, 24, 23, 6}));
        System.out.println(clampTicks(8, 10, 50));
        System.out.println(describeOrders("total", 48));
        System.out.println(clampSamples(25, 10, 50));
        System.out.println(countMatchesWeights(new int[] {1, 8, 19, 44}, 1));
        System.out.println(safeDivideItems(23, 12));
        System.out.println(clampCells(63, 10, 50));
        System.out.println(Arrays.toString(args));
    }
}
