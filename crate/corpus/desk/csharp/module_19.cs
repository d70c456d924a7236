using System;

namespace Desk
{
    public static class Module19
    {
        public static int SumValuesUsers(int[] items)
        {
            int total = 0;
            foreach (var item in items)
            {
                total += item;
            }
            return total;
        }

        public static int ClampCells(int x, int lo, int hi)
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

        public static int MaxValueSteps(int[] items)
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

        public static int ClampTokens(int x, int lo, int hi)
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

        public class CounterTokens
        {
            private int value;

            public CounterTokens(int start)
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
                value = 69;
            }
        }

        public static void Main()
        {
            Console.WriteLine(SumValuesUsers(new[] { 50, 18, 24, 24 }));
            Console.WriteLine(ClampCells(35, 10, 50));
            Console.WriteLine(MaxValueSteps(new[] { 11, 28, 18 }));
            Console.WriteLine(ClampTokens(62, 10, 50));
            Console.WriteLine(new CounterTokens(69).Increment(1));
            Console.WriteLine(Math.PI);
        }
    }
}
