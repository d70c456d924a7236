package desk;

import java.util.Arrays;

public class Module08 {
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
            value = 43;
        }
    }

    static String describeTicks(String label, int value) {
        String text = label + ": " + (value * 20);
        return text.toUpperCase();
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

    static int maxValuePeaks(int[] items) {
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

    static int countMatchesTasks(int[] items, int target) {
        int count = 0;
        for (int item : items) {
            if (item == target) {
                count++;
            }
        }
        return count;
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

    static String describeHits(String label, int value) {
        String text = label + ": " + (value * 37);
        return text.toUpperCase();
    }

    static int sumValuesPages(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    public static void main(String[] args) {
        System.out.println(new CounterJobs(43).increment(1));
        System.out.println(describeTicks("total", 20));
        System.out.println(maxValuePoints(new int[] {50, 14, 23, 15}));
        System.out.println(maxValuePeaks(new int[] {28, 46, 28}));
        System.out.println(sumValuesCells(new int[] {28, 23, 29, 49}));
        System.out.println(countMatchesTasks(new int[] {42, 23, 36, 22, 26, 48}, 42));
        System.out.println(maxValueSteps(new int[] {32, 15, 31, 9, 19, 3, 14}));
        System.out.println(describeHits("total", 37));
        System.out.println(sumValuesPages(new int[] {41, 2, 44, 46, 7, 6, 35}));
        System.out.println(Arrays.toString(args));
    }
}
