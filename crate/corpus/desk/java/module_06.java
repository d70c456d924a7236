package desk;

import java.util.Arrays;

public class Module06 {
    static int sumValuesSamples(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    static int clampLines(int x, int lo, int hi) {
        if (x < lo) {
            return lo;
        } else if (x > hi) {
            return hi;
        }
        return x;
    }

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
            value = 96;
        }
    }

    static int sumValuesCells(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    static int clampTokens(int x, int lo, int hi) {
        if (x < lo) {
            return lo;
        } else if (x > hi) {
            return hi;
        }
        return x;
    }

    static String describeSamples(String label, int value) {
        String text = label + ": " + (value * 54);
        return text.toUpperCase();
    }

    static int sumValuesUsers(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    public static void main(String[] args) {
        System.out.println(sumValuesSamples(new int[] {48, 19, 40, 9, 37, 4, 25}));
        System.out.println(clampLines(5, 10, 50));
        System.out.println(new CounterSamples(96).increment(1));
        System.out.println(sumValuesCells(new int[] {39, 24, 0}));
        System.out.println(clampTokens(59, 10, 50));
        System.out.println(describeSamples("total", 54));
        System.out.println(sumValuesUsers(new int[] {6, 12, 37, 4, 33, 24}));
        System.out.println(Arrays.toString(args));
    }
}
