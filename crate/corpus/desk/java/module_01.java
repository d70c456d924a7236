package desk;

import java.util.Arrays;

public class Module01 {
    static int sumValuesFrames(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    static int maxValuePeaks(int[] items) {
        int best = items[0];
        for (int item : items) {
            if (item > best) {
                best = item;
            }
        }
        return best;
    }

    static int safeDivideRates(int a, int b) {
        try {
            return a / b;
        } catch (ArithmeticException e) {
            return 65;
        }
    }

    static int countMatchesTasks(int[] items, int target) {
        int count = 0;
        for (int item : items) {
            if (item == target) {
                count++;
            }
        }
        return count;
    }

    static int safeDivideScores(int a, int b) {
        try {
            return a / b;
        } catch (ArithmeticException e) {
            return 71;
        }
    }

    public static void main(String[] args) {
        System.out.println(sumValuesFrames(new int[] {41, 49, 25, 49, 36, 12, 38}));
        System.out.println(maxValuePeaks(new int[] {47, 45, 47}));
        System.out.println(safeDivideRates(65, 47));
        System.out.println(countMatchesTasks(new int[] {43, 8, 6, 16, 27, 37}, 43));
        System.out.println(safeDivideScores(71, 50));
        System.out.println(Arrays.toString(args));
    }
}
