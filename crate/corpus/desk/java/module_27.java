package desk;

import java.util.Arrays;

public class Module27 {
    static int maxValuePeaks(int[] items) {
        int best = items[0];
        for (int item : items) {
            if (item > best) {
                best = item;
            }
        }
        return best;
    }

    static int maxValuePrices(int[] items) {
        int best = items[0];
        for (int item : items) {
            if (item > best) {
                best = item;
            }
        }
        return best;
    }

    static class CounterPeaks {
        private int value;

        CounterPeaks(int start) {
            this.value = start;
        }

        int increment(int step) {
            value += step;
            return value;
        }

        void reset() {
            value = 63;
        }
    }

    static int clampUsers(int x, int lo, int hi) {
        if (x < lo) {
            return lo;
        } else if (x > hi) {
            return hi;
        }
        return x;
    }

    static int sumValuesPages(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    public static void main(String[] args) {
        System.out.println(maxValuePeaks(new int[] {40, 33, 49, 2, 32, 32}));
        System.out.println(maxValuePrices(new int[] {37, 50, 42, 16, 23, 47, 17}));
        System.out.println(new CounterPeaks(63).increment(1));
        System.out.println(clampUsers(14, 10, 50));
        System.out.println(sumValuesPages(new int[] {25, 31, 12, 26, 29}));
        System.out.println(Arrays.toString(args));
    }
}
