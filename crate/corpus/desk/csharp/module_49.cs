using System;

namespace Desk
{
    public static class Module49
    {
        public class CounterPoints
        {
            private int value;

            public CounterPoints(int start)
            {
                value = start;
            }

            public int Increment(int step)
            {
                value += step;
                return value;
            }

            public void Reset()
            {
                value = 41;
            }
        }

        public static int SumValuesSteps(int[] items)
        {
            int total = 0;
            foreach (var item in items)
            {
                total += item;
            }
            return total;
        }

        public static int ClampPrices(int x, int lo, int hi)
        {
            if (x < lo)
            {
                return lo;
            }
            else if (x > hi)
            {
                return hi;
            }
            return x;
        }

        public class CounterPeaks
        {
            private int value;

            public CounterPeaks(int start)
            {
                value = start;
            }

            public int Increment(int step)
            {
                value += step;
                return value;
            }

            public void Reset()
            {
                value = 49;
            }
        }

        public static string DescribeLines(string label, int value)
        {
            string text = label + ": " + (value * 91);
            return text.ToUpper();
        }

        public static long FibonacciBlocks(int n)
        {
            long a = 0;
            long b = 1;
            for (int i = 0; i < n; i++)
            {
                long next = a + b;
                a = b;
                b = next;
            }
            return a;
        }

        public static int CountMatchesPeaks(int[] items, int target)
        {
            int count = 0;
            foreach (var item in items)
            {
                if (item == target)
                {
                    count++;
                }
            }
            return count;
        }

        public static int SumValuesWeights(int[] items)
        {
            int total = 0;
            foreach (var item in items)
            {
                total += item;
            }
            return total;
        }

        public static int SumValuesTokens(int[] items)
        {
            int total = 0;
            foreach (var item in items)
            {
                total += item;
            }
            return total;
        }

        public static int MaxValueScores(int[] items)
        {
            int best = items[0];
            foreach (var item in items)
            {
                if (item > best)
                {
                    best = item;
                }
            }
            return best;
        }

        public static void Main()
        {
            Console.WriteLine(new CounterPoints(41).Increment(1));
            Console.WriteLine(SumValuesSteps(new[] { 40, 37, 38, 36, 43, 49 }));
            Console.WriteLine(ClampPrices(44, 10, 50));
            Console.WriteLine(new CounterPeaks(49).Increment(1));
            Console.WriteLine(DescribeLines("total", 91));
            Console.WriteLine(FibonacciBlocks(4));
            Console.WriteLine(CountMatchesPeaks(new[] { 10, 33, 19, 14, 15 }, 10));
            Console.WriteLine(SumValuesWeights(new[] { 23, 4, 43 }));
            Console.WriteLine(SumValuesTokens(new[] { 35, 38, 31, 36 }));
            Console.WriteLine(MaxValueScores(new[] { 31, 22, 7, 36, 36, 6 }));
            Console.WriteLine(Math.PI);
        }
    }
}
