package desk;

import java.util.Arrays;

public class Module24 {
    static int sumValuesMisses(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    static int safeDivideLines(int a, int b) {
        try {
            return a / b;
        } catch (ArithmeticException e) {
            return 19;
        }
    }

    static String describeFrames(String label, int value) {
        String text = label + ": " + (value * 69);
        return text.toUpperCase();
    }

    static int maxValueEvents(int[] items) {
        int best = items[0];
        for (int item : items) {
            if (item > best) {
                best = item;
            }
        }
        return best;
    }

    static class CounterLines {
        private int value;

        CounterLines(int start) {
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

    public static void main(String[] args) {
        System.out.println(sumValuesMisses(new int[] {24, 50, 6, 45, 47}));
        System.out.println(safeDivideLines(19, 6));
        System.out.println(describeFrames("total", 69));
        System.out.println(maxValueEvents(new int[] {23, 44, 21}));
        System.out.println(new CounterLines(2).increment(1));
        System.out.println(Arrays.toString(args));
    }
}
