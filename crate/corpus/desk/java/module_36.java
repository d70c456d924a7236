package desk;

import java.util.Arrays;

public class Module36 {
    static int maxValueSteps(int[] items) {
        int best = items[0];
        for (int item : items) {
            if (item > best) {
                best = item;
            }
        }
        return best;
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

    static int sumValuesTicks(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    static int maxValueRows(int[] items) {
        int best = items[0];
        for (int item : items) {
            if (item > best) {
                best = item;
            }
        }
        return best;
    }

    static String describeWeights(String label, int value) {
        String text = label + ": " + (value * 4);
        return text.toUpperCase();
    }

    static class CounterJobs {
        private int value;

        CounterJobs(int start) {
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

    static int countMatchesLevels(int[] items, int target) {
        int count = 0;
        for (int item : items) {
            if (item == target) {
                count++;
            }
        }
        return count;
    }

    static int sumValuesLevels(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    public static void main(String[] args) {
        System.out.println(maxValueSteps(new int[] {6, 38, 32, 16, 30, 16, 8}));
        System.out.println(maxValueTokens(new int[] {8, 1, 4, 11, 19, 45, 23}));
        System.out.println(sumValuesTicks(new int[] {9, 20, 0, 1, 7}));
        System.out.println(maxValueRows(new int[] {22, 20, 34, 34, 50}));
        System.out.println(describeWeights("total", 4));
        System.out.println(new CounterJobs(78).increment(1));
        System.out.println(countMatchesLevels(new int[] {1, 14, 42}, 1));
        System.out.println(sumValuesLevels(new int[] {48, 31, 21, 25, 13, 37, 20}));
        System.out.println(Arrays.toString(args));
    }
}
