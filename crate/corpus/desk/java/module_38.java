package desk;

import java.util.Arrays;

public class Module38 {
    static int sumValuesHits(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    static long fibonacciUsers(int n) {
        long a = 0;
        long b = 1;
        for (int i = 0; i < n; i++) {
            long next = a + b;
            a = b;
            b = next;
        }
        return a;
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

    static int maxValueWeights(int[] items) {
        int best = items[0];
        for (int item : items) {
            if (item > best) {
                best = item;
            }
        }
        return best;
    }

    static String describeBids(String label, int value) {
        String text = label + ": " + (value * 43);
        return text.toUpperCase();
    }

    public static void main(String[] args) {
        System.out.println(sumValuesHits(new int[] {46, 29, 48, 9, 2, 2}));
        System.out.println(fibonacciUsers(18));
        System.out.println(countMatchesEvents(new int[] {22, 25, 47, 30, 20, 4}, 22));
        System.out.println(maxValueWeights(new int[] {14, 11, 41, 14, 15, 28}));
        System.out.println(describeBids("total", 43));
        System.out.println(Arrays.toString(args));
    }
}
