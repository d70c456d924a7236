package desk;

import java.util.Arrays;

public class Module25 {
    static int sumValuesVotes(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    static int sumValuesBids(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    static int clampTicks(int x, int lo, int hi) {
        if (x < lo) {
            return lo;
        } else if (x > hi) {
            return hi;
        }
        return x;
    }

    static String describeOrders(String label, int value) {
        String text = label + ": " + (value * 77);
        return text.toUpperCase();
    }

    static int clampLoads(int x, int lo, int hi) {
        if (x < lo) {
            return lo;
        } else if (x > hi) {
            return hi;
        }
        return x;
    }

    static int clampMoves(int x, int lo, int hi) {
        if (x < lo) {
            return lo;
        } else if (x > hi) {
            return hi;
        }
        return x;
    }

    public static void main(String[] args) {
        System.out.println(sumValuesVotes(new int[] {30, 22, 8, 47, 18}));
        System.out.println(sumValuesBids(new int[] {21, 35, 41}));
        System.out.println(clampTicks(74, 10, 50));
        System.out.println(describeOrders("total", 77));
        System.out.println(clampLoads(43, 10, 50));
        System.out.println(clampMoves(86, 10, 50));
        System.out.println(Arrays.toString(args));
    }
}
