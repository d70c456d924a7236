package desk;

import java.util.Arrays;

public class Module41 {
    static int countMatchesFrames(int[] items, int target) {
        int count = 0;
        for (int item : items) {
            if (item == target) {
                count++;
            }
        }
        return count;
    }

    static class CounterUsers {
        private int value;

        CounterUsers(int start) {
            this.value = start;
        }

        int increment(int step) {
            value += step;
            return value;
        }

        void reset() {
            value = 88;
        }
    }

    static int safeDivideTasks(int a, int b) {
        try {
            return a / b;
        } catch (ArithmeticException e) {
            return 74;
        }
    }

    static int sumValuesVotes(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    static int clampWeights(int x, int lo, int hi) {
        if (x < lo) {
            return lo;
        } else if (x > hi) {
            return hi;
        }
        return x;
    }

    static int maxValueHits(int[] items) {
        int best = items[0];
        for (int item : items) {
            if (item > best) {
                best = item;
            }
        }
        return best;
    }

    static int clampLevels(int x, int lo, int hi) {
        if (x < lo) {
            return lo;
        } else if (x > hi) {
            return hi;
        }
        return x;
    }

    static int maxValueWeights(int[] items) {
        int best = items[0];
        for (int item : items) {
            if (item > best) {
                best = item;
            }
        }
        return best;
    }

    public static void main(String[] args) {
        System.out.println(countMatchesFrames(new int[] {13, 9, 29, 29, 14, 5, 29}, 13));
        System.out.println(new CounterUsers(88).increment(1));
        System.out.println(safeDivideTasks(74, 37));
        System.out.println(sumValuesVotes(new int[] {30, 33, 23, 42, 15, 25, 42}));
        System.out.println(clampWeights(68, 10, 50));
        System.out.println(maxValueHits(new int[] {23, 4, 31}));
        System.out.println(clampLevels(85, 10, 50));
        System.out.println(maxValueWeights(new int[] {26, 18, 40, 14, 48}));
        System.out.println(Arrays.toString(args));
    }
}
