using System;

namespace Desk
{
    public static class Module48
    {
        public static long FibonacciVotes(int n)
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

        public static int CountMatchesLevels(int[] items, int target)
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

        public static int ClampSamples(int x, int lo, int hi)
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

        public static int SumValuesPoints(int[] items)
        {
            int total = 0;
            foreach (var item in items)
            {
                total += item;
            }
            return total;
        }

        public static int MaxValueOrders(int[] items)
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

        public static long FibonacciPrices(int n)
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

        public static int ClampPages(int x, int lo, int hi)
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

        public static void Main()
        {
            Console.WriteLine(FibonacciVotes(12));
            Console.WriteLine(CountMatchesLevels(new[] { 28, 48, 13, 18 }, 28));
            Console.WriteLine(ClampSamples(3, 10, 50));
            Console.WriteLine(SumValuesPoints(new[] { 31, 15, 16, 42 }));
            Console.WriteLine(MaxValueOrders(new[] { 18, 6, 46, 47, 49, 17, 7 }));
            Console.WriteLine(FibonacciPrices(6));
            Console.WriteLine(ClampPages(72, 10, 50));
            Console.WriteLine(Math.PI);
        }
    }
}
