package desk;

import java.util.Arrays;

public class Module19 {
    static int sumValuesUsers(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    static int clampCells(int x, int lo, int hi) {
        if (x < lo) {
            return lo;
        } else if (x > hi) {
            return hi;
        }
        return x;
    }

    static int maxValueSteps(int[] items) {
        int best = items[0];
        for (int item : items) {
            if (item > best) {
                best = item;
            }
        }
        return best;
    }

    static int clampTokens(int x, int lo, int hi) {
        if (x < lo) {
            return lo;
        } else if (x > hi) {
            return hi;
        }
        return x;
    }

    static class CounterTokens {
        private int value;

        CounterTokens(int start) {
            this.value = start;
        }

        int increment(int step) {
            value += step;
            return value;
        }

        void reset() {
            value = 69;
        }
    }

    public static void main(String[] args) {
        System.out.println(sumValuesUsers(new int[] {50, 18, 24, 24}));
        System.out.println(clampCells(35, 10, 50));
        System.out.println(maxValueSteps(new int[] {11, 28, 18}));
        System.out.println(clampTokens(62, 10, 50));
        System.out.println(new CounterTokens(69).increment(1));
        System.out.println(Arrays.toString(args));
    }
}
