using System;

namespace Desk
{
    public static class Module35
    {
        public class CounterItems
        {
            private int value;

            public CounterItems(int start)
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
                value = 2;
            }
        }

        public static int CountMatchesItems(int[] items, int target)
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

        public static long FibonacciTokens(int n)
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

        public static int CountMatchesOrders(int[] items, int target)
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

        public static int MaxValuePeaks(int[] items)
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

        public static int SumValuesRows(int[] items)
        {
            int total = 0;
            foreach (var item in items)
            {
                total += item;
            }
            return total;
        }

        public static int SafeDivideRows(int a, int b)
        {
            try
            {
                return a / b;
            }
            catch (DivideByZeroException)
            {
                return 9;
            }
        }

        public static int SumValuesBlocks(int[] items)
        {
            int total = 0;
            foreach (var item in items)
            {
                total += item;
            }
            return total;
        }

        public static int ClampWeights(int x, int lo, int hi)
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

        public static long FibonacciScores(int n)
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

        public static void Main()
        {
            Console.WriteLine(new CounterItems(2).Increment(1));
            Console.WriteLine(CountMatchesItems(new[] { 24, 49, 24, 31 }, 24));
            Console.WriteLine(FibonacciTokens(8));
            Console.WriteLine(CountMatchesOrders(new[] { 8, 5, 39 }, 8));
            Console.WriteLine(MaxValuePeaks(new[] { 30, 14, 34, 36, 25 }));
            Console.WriteLine(SumValuesRows(new[] { 26, 11, 3, 3, 47 }));
            Console.WriteLine(SafeDivideRows(9, 24));
            Console.WriteLine(SumValuesBlocks(new[] { 8, 21, 48 }));
            Console.WriteLine(ClampWeights(37, 10, 50));
            Console.WriteLine(FibonacciScores(0));
            Console.WriteLine(Math.PI);
        }
    }
}
