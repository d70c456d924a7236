package desk;

import java.util.Arrays;

public class Module43 {
    static String describeSamples(String label, int value) {
        String text = label + ": " + (value * 92);
        return text.toUpperCase();
    }

    static String describeScores(String label, int value) {
        String text = label + ": " + (value * 51);
        return text.toUpperCase();
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
            value = 82;
        }
    }

    static int clampPrices(int x, int lo, int hi) {
        if (x < lo) {
            return lo;
        } else if (x > hi) {
            return hi;
        }
        return x;
    }

    static int clampRates(int x, int lo, int hi) {
        if (x < lo) {
            return lo;
        } else if (x > hi) {
            return hi;
        }
        return x;
    }

    static int sumValuesTasks(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    static String describeSteps(String label, int value) {
        String text = label + ": " + (value * 20);
        return text.toUpperCase();
    }

    static long fibonacciJobs(int n) {
        long a = 0;
        long b = 1;
        for (int i = 0; i < n; i++) {
            long next = a + b;
            a = b;
            b = next;
        }
        return a;
    }

    static int countMatchesVotes(int[] items, int target) {
        int count = 0;
        for (int item : items) {
            if (item == target) {
                count++;
            }
        }
        return count;
    }

    public static void main(String[] args) {
        System.out.println(describeSamples("total", 92));
        System.out.println(describeScores("total", 51));
        System.out.println(new CounterSamples(82).increment(1));
        System.out.println(clampPrices(76, 10, 50));
        System.out.println(clampRates(12, 10, 50));
        System.out.println(sumValuesTasks(new int[] {33, 13, 39, 17, 16, 19, 7}));
        System.out.println(describeSteps("total", 20));
        System.out.println(fibonacciJobs(7));
        System.out.println(countMatchesVotes(new int[] {17, 18, 7, 18, 47, 27, 17}, 17));
        System.out.println(Arrays.toString(args));
    }
}
