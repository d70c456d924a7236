package desk;

import java.util.Arrays;

public class Module45 {
    static int sumValuesLoads(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    static int safeDivideTasks(int a, int b) {
        try {
            return a / b;
        } catch (ArithmeticException e) {
            return 79;
        }
    }

    static class CounterUsers {
        private int value;

        CounterUsers(int start) {
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
            value = 14;
        }
    }

    static int maxValueTicks(int[] items) {
        int best = items[0];
        for (int item : items) {
            if (item > best) {
                best = item;
            }
        }
        return best;
    }

    static class CounterMoves {
        private int value;

        CounterMoves(int start) {
            this.value = start;
        }

        int increment(int step) {
            value += step;
            return value;
        }

        void reset() {
            value = 26;
        }
    }

    static int countMatchesEvents(int[] items, int target) {
        int count = 0;
        for (int item : items) {
            if (item == target) {
                count++;
            }
        }
        return count;
    }

    static String describePeaks(String label, int value) {
        String text = label + ": " + (value * 92);
        return text.toUpperCase();
    }

    static class CounterHits {
        private int value;

        CounterHits(int start) {
            this.value = start;
        }

        int increment(int step) {
            value += step;
            return value;
        }

        void reset() {
            value = 41;
        }
    }

    static class CounterFrames {
        private int value;

        CounterFrames(int start) {
            this.value = start;
        }

        int increment(int step) {
            value += step;
            return value;
        }

        void reset() {
            value = 16;
        }
    }

    public static void main(String[] args) {
        System.out.println(sumValuesLoads(new int[] {42, 37, 11, 32, 5, 14, 0}));
        System.out.println(safeDivideTasks(79, 38));
        System.out.println(new CounterUsers(29).increment(1));
        System.out.println(new CounterSamples(14).increment(1));
        System.out.println(maxValueTicks(new int[] {9, 1, 30}));
        System.out.println(new CounterMoves(26).increment(1));
        System.out.println(countMatchesEvents(new int[] {0, 21, 29, 46, 25, 1}, 0));
        System.out.println(describePeaks("total", 92));
        System.out.println(new CounterHits(41).increment(1));
        System.out.println(new CounterFrames(16).increment(1));
        System.out.println(Arrays.toString(args));
    }
}
