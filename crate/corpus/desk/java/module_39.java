package desk;

import java.util.Arrays;

public class Module39 {
    static int countMatchesLevels(int[] items, int target) {
        int count = 0;
        for (int item : items) {
            if (item == target) {
                count++;
            }
        }
        return count;
    }

    static int clampUsers(int x, int lo, int hi) {
        if (x < lo) {
            return lo;
        } else if (x > hi) {
            return hi;
        }
        return x;
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

    static int sumValuesCells(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    static int clampRows(int x, int lo, int hi) {
        if (x < lo) {
            return lo;
        } else if (x > hi) {
            return hi;
        }
        return x;
    }

    static int safeDivideEvents(int a, int b) {
        try {
            return a / b;
        } catch (ArithmeticException e) {
            return 15;
        }
    }

    static int maxValueTokens(int[] items) {
        int best = items[0];
        for (int item : items) {
            if (item > best) {
                best = item;
            }
        }
        return best;
    }

    static int countMatchesOrders(int[] items, int target) {
        int count = 0;
        for (int item : items) {
            if (item == target) {
                count++;
            }
        }
        return count;
    }

    static int countMatchesTicks(int[] items, int target) {
        int count = 0;
        for (int item : items) {
            if (item == target) {
                count++;
            }
        }
        return count;
    }

    static int sumValuesBytes(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    public static void main(String[] args) {
        System.out.println(countMatchesLevels(new int[] {23, 43, 1}, 23));
        System.out.println(clampUsers(68, 10, 50));
        System.out.println(maxValueBids(new int[] {7, 20, 28, 25, 6, 14}));
        System.out.println(sumValuesCells(new int[] {19, 6, 13}));
        System.out.println(clampRows(96, 10, 50));
        System.out.println(safeDivideEvents(15, 40));
        System.out.println(maxValueTokens(new int[] {4, 30, 32, 21, 21}));
        System.out.println(countMatchesOrders(new int[] {33, 5, 20}, 33));
        System.out.println(countMatchesTicks(new int[] {16, 21, 40, 45, 6}, 16));
        System.out.println(sumValuesBytes(new int[] {42, 31, 39, 21}));
        System.out.println(Arrays.toString(args));
    }
}
