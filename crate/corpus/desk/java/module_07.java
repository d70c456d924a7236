package desk;

import java.util.Arrays;

public class Module07 {
    static int countMatchesEvents(int[] items, int target) {
        int count = 0;
        for (int item : items) {
            if (item == target) {
                count++;
            }
        }
        return count;
    }

    static long fibonacciPrices(int n) {
        long a = 0;
        long b = 1;
        for (int i = 0; i < n; i++) {
            long next = a + b;
            a = b;
            b = next;
        }
        return a;
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

    static int clampBytes(int x, int lo, int hi) {
        if (x < lo) {
            return lo;
        } else if (x > hi) {
            return hi;
        }
        return x;
    }

    static int sumValuesMoves(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    public static void main(String[] args) {
        System.out.println(countMatchesEvents(new int[] {3, 28, 37, 18, 46, 39, 2}, 3));
        System.out.println(fibonacciPrices(17));
        System.out.println(countMatchesLoads(new int[] {17, 44, 41}, 17));
        System.out.println(clampBytes(39, 10, 50));
        System.out.println(sumValuesMoves(new int[] {0, 3, 37, 28}));
        System.out.println(Arrays.toString(args));
    }
}
