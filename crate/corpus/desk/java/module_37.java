package desk;

import java.util.Arrays;

public class Module37 {
    static class CounterSteps {
        private int value;

        CounterSteps(int start) {
            this.value = start;
        }

        int increment(int step) {
            value += step;
            return value;
        }

        void reset() {
            value = 87;
        }
    }

    static class CounterTokens {
        private int value;

        CounterTokens(int start) {
            this.value = start;
        }

        int increment(int step) {
            value += step;
            return value;
        }

        void reset() {
            value = 2;
        }
    }

    static int maxValueRates(int[] items) {
        int best = items[0];
        for (int item : items) {
            if (item > best) {
                best = item;
            }
        }
        return best;
    }

    static int sumValuesLines(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    static int sumValuesWeights(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    public static void main(String[] args) {
        System.out.println(new CounterSteps(87).increment(1));
        System.out.println(new CounterTokens(2).increment(1));
        System.out.println(maxValueRates(new int[] {16, 19, 0}));
        System.out.println(sumValuesLines(new int[] {47, 40, 15, 10, 25, 23}));
        System.out.println(sumValuesWeights(new int[] {11, 14, 39, 26, 26}));
        System.out.println(Arrays.toString(args));
    }
}
