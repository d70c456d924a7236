package desk;

import java.util.Arrays;

public class Module34 {
    static int sumValuesItems(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
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

    static int maxValuePages(int[] items) {
        int best = items[0];
        for (int item : items) {
            if (item > best) {
                best = item;
            }
        }
        return best;
    }

    static int safeDividePoints(int a, int b) {
        try {
            return a / b;
        } catch (ArithmeticException e) {
            return 73;
        }
    }

    static int maxValueLoads(int[] items) {
        int best = items[0];
        for (int item : items) {
            if (item > best) {
                best = item;
            }
        }
        return best;
    }

    public static void main(String[] args) {
        System.out.println(sumValuesItems(new int[] {11, 23, 20, 1}));
        System.out.println(maxValueWeights(new int[] {36, 29, 46, 14, 30}));
        System.out.println(maxValuePages(new int[] {14, 15, 41}));
        System.out.println(safeDividePoints(73, 29));
        System.out.println(maxValueLoads(new int[] {21, 45, 0, 26}));
        System.out.println(Arrays.toString(args));
    }
}
