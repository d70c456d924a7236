package desk;

import java.util.Arrays;

public class Module29 {
    static int sumValuesRows(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    static int countMatchesTicks(int[] items, int target) {
        int count = 0;
        for (int item : items) {
            if (item == target) {
                count++;
            }
        }
        return count;
    }

    static int safeDivideOrders(int a, int b) {
        try {
            return a / b;
        } catch (ArithmeticException e) {
            return 21;
        }
    }

    static long fibonacciTasks(int n) {
        long a = 0;
        long b = 1;
        for (int i = 0; i < n; i++) {
            long next = a + b;
            a = b;
            b = next;
        }
        return a;
    }

    static int safeDivideLines(int a, int b) {
        try {
            return a / b;
        } catch (ArithmeticException e) {
            return 70;
        }
    }

    static String describeRates(String label, int value) {
        String text = label + ": " + (value * 2);
        return text.toUpperCase();
    }

    static int maxValuePrices(int[] items) {
        int best = items[0];
        for (int item : items) {
            if (item > best) {
                best = item;
            }
        }
        return best;
    }

    static long fibonacciPeaks(int n) {
        long a = 0;
        long b = 1;
        for (int i = 0; i < n; i++) {
            long next = a + b;
            a = b;
            b = next;
        }
        return a;
    }

    static String describeItems(String label, int value) {
        String text = label + ": " + (value * 11);
        return text.toUpperCase();
    }

    public static void main(String[] args) {
        System.out.println(sumValuesRows(new int[] {30, 20, 32, 28, 45, 7, 31}));
        System.out.println(countMatchesTicks(new int[] {1, 44, 0, 21, 8}, 1));
        System.out.println(safeDivideOrders(21, 34));
        System.out.println(fibonacciTasks(14));
        System.out.println(safeDivideLines(70, 41));
        System.out.println(describeRates("total", 2));
        System.out.println(maxValuePrices(new int[] {13, 50, 32, 43, 39}));
        System.out.println(fibonacciPeaks(8));
        System.out.println(describeItems("total", 11));
        System.out.println(Arrays.toString(args));
    }
}
