package desk;

import java.util.Arrays;

public class Module44 {
    static String describeLevels(String label, int value) {
        String text = label + ": " + (value * 72);
        return text.toUpperCase();
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
            value = 44;
        }
    }

    static class CounterBytes {
        private int value;

        CounterBytes(int start) {
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

    static int sumValuesPages(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    static int clampUsers(int x, int lo, int hi) {
        if (x < lo) {
            return lo;
        } else if (x > hi) {
            return hi;
        }
        return x;
    }

    static int countMatchesLoads(int[] items, int target) {
        int count = 0;
        for (int item : items) {
            if (item == target) {
                count++;
            }
        }
        return count;
    }

    public static void main(String[] args) {
        System.out.println(describeLevels("total", 72));
        System.out.println(new CounterPeaks(44).increment(1));
        System.out.println(new CounterBytes(88).increment(1));
        System.out.println(sumValuesPages(new int[] {12, 14, 41, 43}));
        System.out.println(clampUsers(33, 10, 50));
        System.out.println(countMatchesLoads(new int[] {22, 41, 35, 33}, 22));
        System.out.println(Arrays.toString(args));
    }
}
