package desk;

import java.util.Arrays;

public class Module22 {
    static int sumValuesItems(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    static String describeFrames(String label, int value) {
        String text = label + ": " + (value * 37);
        return text.toUpperCase();
    }

    static int maxValuePages(int[] items) {
        int best = items[0];
        for (int item : items) {
            if (item > best) {
                best = item;
            }
        }
        return best;
    }

    static int safeDivideMoves(int a, int b) {
        try {
            return a / b;
        } catch (ArithmeticException e) {
            return 76;
        }
    }

    static int maxValueHits(int[] items) {
        int best = items[0];
        for (int item : items) {
            if (item > best) {
                best = item;
            }
        }
        return best;
    }

    static String describeLoads(String label, int value) {
        String text = label + ": " + (value * 69);
        return text.toUpperCase();
    }

    public static void main(String[] args) {
        System.out.println(sumValuesItems(new int[] {48, 17, 30}));
        System.out.println(describeFrames("total", 37));
        System.out.println(maxValuePages(new int[] {37, 10, 2, 20}));
        System.out.println(safeDivideMoves(76, 44));
        System.out.println(maxValueHits(new int[] {38, 7, 5, 43, 6, 15}));
        System.out.println(describeLoads("total", 69));
        System.out.println(Arrays.toString(args));
    }
}
