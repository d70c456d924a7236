package desk;

import java.util.Arrays;

public class Module03 {
    static String describeScores(String label, int value) {
        String text = label + ": " + (value * 62);
        return text.toUpperCase();
    }

    static int clampBids(int x, int lo, int hi) {
        if (x < lo) {
            return lo;
        } else if (x > hi) {
            return hi;
        }
        return x;
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
            value = 71;
        }
    }

    static class CounterOrders {
        private int value;

        CounterOrders(int start) {
            this.value = start;
        }

        int increment(int step) {
            value += step;
            return value;
        }

        void reset() {
            value = 19;
        }
    }

    static class CounterVotes {
        private int value;

        CounterVotes(int start) {
            this.value = start;
        }

        int increment(int step) {
            value += step;
            return value;
        }

        void reset() {
            value = 9;
        }
    }

    static int safeDivideRates(int a, int b) {
        try {
            return a / b;
        } catch (ArithmeticException e) {
            return 27;
        }
    }

    static int sumValuesTicks(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    static String describeLines(String label, int value) {
        String text = label + ": " + (value * 34);
        return text.toUpperCase();
    }

    public static void main(String[] args) {
        System.out.println(describeScores("total", 62));
        System.out.println(clampBids(87, 10, 50));
        System.out.println(new CounterJobs(71).increment(1));
        System.out.println(new CounterOrders(19).increment(1));
        System.out.println(new CounterVotes(9).increment(1));
        System.out.println(safeDivideRates(27, 48));
        System.out.println(sumValuesTicks(new int[] {8, 37, 47, 39}));
        System.out.println(describeLines("total", 34));
        System.out.println(Arrays.toString(args));
    }
}
