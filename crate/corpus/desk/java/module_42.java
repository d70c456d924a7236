package desk;

import java.util.Arrays;

public class Module42 {
    static int countMatchesVotes(int[] items, int target) {
        int count = 0;
        for (int item : items) {
            if (item == target) {
                count++;
            }
        }
        return count;
    }

    static String describeEvents(String label, int value) {
        String text = label + ": " + (value * 23);
        return text.toUpperCase();
    }

    static int sumValuesBytes(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    static String describePoints(String label, int value) {
        String text = label + ": " + (value * 20);
        return text.toUpperCase();
    }

    static long fibonacciVotes(int n) {
        long a = 0;
        long b = 1;
        for (int i = 0; i < n; i++) {
            long next = a + b;
            a = b;
            b = next;
        }
        return a;
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
            value = 5;
        }
    }

    public static void main(String[] args) {
        System.out.println(countMatchesVotes(new int[] {30, 30, 10, 20}, 30));
        System.out.println(describeEvents("total", 23));
        System.out.println(sumValuesBytes(new int[] {30, 33, 13, 48, 13, 13, 28}));
        System.out.println(describePoints("total", 20));
        System.out.println(fibonacciVotes(10));
        System.out.println(new CounterBytes(5).increment(1));
        System.out.println(Arrays.toString(args));
    }
}
