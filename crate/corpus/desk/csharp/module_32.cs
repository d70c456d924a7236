using System;

namespace Desk
{
    public static class Module32
    {
        public static int SafeDividePeaks(int a, int b)
        {
            try
            {
                return a / b;
            }
            catch (DivideByZeroException)
            {
                return 48;
            }
        }

        public static int CountMatchesBytes(int[] items, int target)
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

        public static string DescribeBids(string label, int value)
        {
            string text = label + ": " + (value * 35);
            return text.ToUpper();
        }

        public static int ClampBytes(int x, int lo, int hi)
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

        public class CounterPrices
        {
            private int value;

            public CounterPrices(int start)
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
                value = 42;
            }
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

        public static int ClampEvents(int x, int lo, int hi)
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

        public static int SumValuesWeights(int[] items)
        {
            int total = 0;
            foreach (var item in items)
            {
                total += item;
            }
            return total;
        }

        public static void Main()
        {
            Console.WriteLine(SafeDividePeaks(48, 12));
            Console.WriteLine(CountMatchesBytes(new[] { 23, 16, 33, 1, 46, 2, 36 }, 23));
            Console.WriteLine(DescribeBids("total", 35));
            Console.WriteLine(ClampBytes(6, 10, 50));
            Console.WriteLine(new CounterPrices(42).Increment(1));
            Console.WriteLine(FibonacciMisses(10));
            Console.WriteLine(ClampEvents(51, 10, 50));
            Console.WriteLine(SumValuesWeights(new[] { 30, 22, 15, 0, 47, 26, 15 }));
            Console.WriteLine(Math.PI);
        }
    }
}
