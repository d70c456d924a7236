package desk;

import java.util.Arrays;

public class Module09 {
    static int sumValuesTicks(int[] items) {
        int total = 0;
        for (int item : items) {
            total += item;
        }
        return total;
    }

    static class CounterTasks {
        private int value;

        CounterTasks(int start) {
            this.value = start;
        }

        int increment(int step) {
            value += step;
            return value;
        }

        void reset() {
            value = 11;
        }
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

    static class CounterEvents {
        private int value;

        CounterEvents(int start) {
            this.value = start;
        }

        int increment(int step) {
            value += step;
            return value;
        }

        void reset() {
            value = 60;
        }
    }

    static int countMatchesPages(int[] items, int target) {
        int count = 0;
        for (int item : items) {
            if (item == target) {
                count++;
            }
        }
        return count;
    }

    static int clampPeaks(int x, int lo, int hi) {
        if (x < lo) {
            return lo;
        } else if (x > hi) {
            return hi;
        }
        return x;
    }

    public static void main(String[] args) {
        System.out.println(sumValuesTicks(new int[] {2, 13, 12}));
        System.out.println(new CounterTasks(11).increment(1));
        System.out.println(maxValuePages(new int[] {8, 38, 22, 40, 8, 8, 44}));
        System.out.println(new CounterEvents(60).increment(1));
        System.out.println(countMatchesPages(new int[] {19, 17, 13, 26, 23}, 19));
        System.out.println(clampPeaks(45, 10, 50));
        System.out.println(Arrays.toString(args));
    }
}
