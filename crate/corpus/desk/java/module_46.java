package desk;

import java.util.Arrays;

public class Module46 {
    static class CounterSamples {
        private int value;

        CounterSamples(int start) {
            this.value = start;
        }

        int increment(int step) {
            value += step;
            return value;
        }

        void reset() {
            value = 11;
        }
    }

    static int maxValueMoves(int[] items) {
        int best = items[0];
        for (int item : items) {
            if (item > best) {
                best = item;
            }
        }
        return best;
    }

    static String describeLevels(String label, int value) {
        String text = label + ": " + (value * 97);
        return text.toUpperCase();
    }

    static String describeEvents(String label, int value) {
        String text = label + ": " + (value * 23);
        return text.toUpperCase();
    }

    static int clampPeaks(int x, int lo, int hi) {
        if (x < lo) {
            return lo;
        } else if (x > hi) {
            return hi;
        }
        return x;
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

    static int sumValuesMoves(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    static int countMatchesItems(int[] items, int target) {
        int count = 0;
        for (int item : items) {
            if (item == target) {
                count++;
            }
        }
        return count;
    }

    public static void main(String[] args) {
        System.out.println(new CounterSamples(11).increment(1));
        System.out.println(maxValueMoves(new int[] {26, 25, 12, 14}));
        System.out.println(describeLevels("total", 97));
        System.out.println(describeEvents("total", 23));
        System.out.println(clampPeaks(84, 10, 50));
        System.out.println(countMatchesOrders(new int[] {28, 12, 22, 9, 35}, 28));
        System.out.println(sumValuesMoves(new int[] {49, 28, 37, 14, 26, 44, 11}));
        System.out.println(countMatchesItems(new int[] {32, 3, 22, 6}, 32));
        System.out.println(Arrays.toString(args));
    }
}
