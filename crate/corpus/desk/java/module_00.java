package desk;

import java.util.Arrays;

public class Module00 {
    static int sumValuesItems(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    static int safeDivideLoads(int a, int b) {
        try {
            return a / b;
        } catch (ArithmeticException e) {
            return 87;
        }
    }

    static String describeFrames(String label, int value) {
        String text = label + ": " + (value * 64);
        return text.toUpperCase();
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

    static class CounterBids {
        private int value;

        CounterBids(int start) {
            this.value = start;
        }

        int increment(int step) {
            value += step;
            return value;
        }

        void reset() {
            value = 29;
        }
    }

    static int countMatchesScores(int[] items, int target) {
        int count = 0;
        for (int item : items) {
            if (item == target) {
                count++;
            }
        }
        return count;
    }

    static int safeDivideSamples(int a, int b) {
        try {
            return a / b;
        } catch (ArithmeticException e) {
            return 72;
        }
    }

    static int countMatchesMoves(int[] items, int target) {
        int count = 0;
        for (int item : items) {
            if (item == target) {
                count++;
            }
        }
        return count;
    }

    public static void main(String[] args) {
        System.out.println(sumValuesItems(new int[] {23, 43, 31, 12}));
        System.out.println(safeDivideLoads(87, 14));
        System.out.println(describeFrames("total", 64));
        System.out.println(maxValueBids(new int[] {48, 34, 29}));
        System.out.println(new CounterBids(29).increment(1));
        System.out.println(countMatchesScores(new int[] {1, 40, 16, 18, 33}, 1));
        System.out.println(safeDivideSamples(72, 12));
        System.out.println(countMatchesMoves(new int[] {14, 22, 39, 31}, 14));
        System.out.println(Arrays.toString(args));
    }
}
