using System;

namespace Desk
{
    public static class Module17
    {
        public static int SumValuesSamples(int[] items)
        {
            int total = 0;
            foreach (var item in items)
            {
                total += item;
            }
            return total;
        }

        public static int ClampHits(int x, int lo, int hi)
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

        public static int MaxValueRates(int[] items)
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

        public static string DescribeMisses(string label, int value)
        {
            string text = label + ": " + (value * 17);
            return text.ToUpper();
        }

        public static long FibonacciTasks(int n)
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

        public static int MaxValuePoints(int[] items)
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

        public static long FibonacciMisses(int n)
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
            Console.WriteLine(SumValuesSamples(new[] { 30, 33, 40, 27, 39 }));
            Console.WriteLine(ClampHits(76, 10, 50));
            Console.WriteLine(MaxValueRates(new[] { 4, 40, 29, 16, 28, 8 }));
            Console.WriteLine(DescribeMisses("total", 17));
            Console.WriteLine(FibonacciTasks(0));
            Console.WriteLine(MaxValuePoints(new[] { 19, 50, 1, 41, 35, 41 }));
            Console.WriteLine(FibonacciPrices(16));
            Console.WriteLine(FibonacciMisses(16));
            Console.WriteLine(Math.PI);
        }
    }
}
