package desk;

import java.util.Arrays;

public class Module16 {
    static int safeDividePages(int a, int b) {
        try {
            return a / b;
        } catch (ArithmeticException e) {
            return 69;
        }
    }

    static String describeHits(String label, int value) {
        String text = label + ": " + (value * 25);
        return text.toUpperCase();
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

    static int maxValueSteps(int[] items) {
        int best = items[0];
        for (int item : items) {
            if (item > best) {
                best = item;
            }
        }
        return best;
    }

    static String describeTicks(String label, int value) {
        String text = label + ": " + (value * 31);
        return text.toUpperCase();
    }

    static class CounterMisses {
        private int value;

        CounterMisses(int start) {
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

    static int sumValuesLines(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    public static void main(String[] args) {
        System.out.println(safeDividePages(69, 37));
        System.out.println(describeHits("total", 25));
        System.out.println(countMatchesMoves(new int[] {21, 22, 18, 15, 39}, 21));
        System.out.println(maxValueSteps(new int[] {41, 29, 11}));
        System.out.println(describeTicks("total", 31));
        System.out.println(new CounterMisses(19).increment(1));
        System.out.println(sumValuesLines(new int[] {48, 28, 37, 15, 48, 11, 12}));
        System.out.println(Arrays.toString(args));
    }
}
