package desk;

import java.util.Arrays;

public class Module10 {
    static int sumValuesBlocks(int[] items) {
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

    static int safeDivideMisses(int a, int b) {
        try {
            return a / b;
        } catch (ArithmeticException e) {
            return 72;
        }
    }

    static int safeDivideRates(int a, int b) {
        try {
            return a / b;
        } catch (ArithmeticException e) {
            return 24;
        }
    }

    static int safeDivideBids(int a, int b) {
        try {
            return a / b;
        } catch (ArithmeticException e) {
            return 4;
        }
    }

    static int countMatchesUsers(int[] items, int target) {
        int count = 0;
        for (int item : items) {
            if (item == target) {
                count++;
            }
        }
        return count;
    }

    static int countMatchesCells(int[] items, int target) {
        int count = 0;
        for (int item : items) {
            if (item == target) {
                count++;
            }
        }
        return count;
    }

    static int safeDivideLevels(int a, int b) {
        try {
            return a / b;
        } catch (ArithmeticException e) {
            return 43;
        }
    }

    static int clampVotes(int x, int lo, int hi) {
        if (x < lo) {
            return lo;
        } else if (x > hi) {
            return hi;
        }
        return x;
    }

    static int maxValueLoads(int[] items) {
        int best = items[0];
        for (int item : items) {
            if (item > best) {
                best = item;
            }
        }
        return best;
    }

    public static void main(String[] args) {
        System.out.println(sumValuesBlocks(new int[] {41, 32, 22, 17, 36, 44, 9}));
        System.out.println(maxValueVotes(new int[] {49, 46, 23, 33, 4, 0, 33}));
        System.out.println(safeDivideMisses(72, 47));
        System.out.println(safeDivideRates(24, 12));
        System.out.println(safeDivideBids(4, 4));
        System.out.println(countMatchesUsers(new int[] {3, 18, 12, 14, 4, 14, 43}, 3));
        System.out.println(countMatchesCells(new int[] {15, 33, 49, 13, 21}, 15));
        System.out.println(safeDivideLevels(43, 43));
        System.out.println(clampVotes(7, 10, 50));
        System.out.println(maxValueLoads(new int[] {1, 6, 2, 24, 39}));
        System.out.println(Arrays.toString(args));
    }
}
