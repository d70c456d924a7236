using System;

namespace Desk
{
    public static class Module27
    {
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

        public static int MaxValuePrices(int[] items)
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
                value = 63;
            }
        }

        public static int ClampUsers(int x, int lo, int hi)
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

        public static int SumValuesPages(int[] items)
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
            Console.WriteLine(MaxValuePeaks(new[] { 40, 33, 49, 2, 32, 32 }));
            Console.WriteLine(MaxValuePrices(new[] { 37, 50, 42, 16, 23, 47, 17 }));
            Console.WriteLine(new CounterPeaks(63).Increment(1));
            Console.WriteLine(ClampUsers(14, 10, 50));
            Console.WriteLine(SumValuesPages(new[] { 25, 31, 12, 26, 29 }));
            Console.WriteLine(Math.PI);
        }
    }
}
