package desk;

import java.util.Arrays;

public class Module04 {
    static int maxValueMisses(int[] items) {
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

    static int clampCells(int x, int lo, int hi) {
        if (x < lo) {
            return lo;
        } else if (x > hi) {
            return hi;
        }
        return x;
    }

    static String describeFrames(String label, int value) {
        String text = label + ": " + (value * 8);
        return text.toUpperCase();
    }

    static int sumValuesVotes(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    static int countMatchesHits(int[] items, int target) {
        int count = 0;
        for (int item : items) {
            if (item == target) {
                count++;
            }
        }
        return count;
    }

    static String describeHits(String label, int value) {
        String text = label + ": " + (value * 24);
        return text.toUpperCase();
    }

    static int maxValueJobs(int[] items) {
        int best = items[0];
        for (int item : items) {
            if (item > best) {
                best = item;
            }
        }
        return best;
    }

    public static void main(String[] args) {
        System.out.println(maxValueMisses(new int[] {9, 45, 1}));
        System.out.println(clampLevels(21, 10, 50));
        System.out.println(clampCells(5, 10, 50));
        System.out.println(describeFrames("total", 8));
        System.out.println(sumValuesVotes(new int[] {3, 45, 11, 42, 31, 27}));
        System.out.println(countMatchesHits(new int[] {28, 10, 15, 29, 8, 11}, 28));
        System.out.println(describeHits("total", 24));
        System.out.println(maxValueJobs(new int[] {1, 38, 20, 9, 19, 28, 41}));
        System.out.println(Arrays.toString(args));
    }
}
