using System;

namespace Desk
{
    public static class Module02
    {
        public static int SumValuesMisses(int[] items)
        {
            int total = 0;
            foreach (var item in items)
            {
                total += item;
            }
            return total;
        }

        public static int ClampOrders(int x, int lo, int hi)
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

        public static int CountMatchesSamples(int[] items, int target)
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

        public static int CountMatchesPages(int[] items, int target)
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

        public class CounterLevels
        {
            private int value;

            public CounterLevels(int start)
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
                value = 78;
            }
        }

        public static int CountMatchesTokens(int[] items, int target)
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

        public static int SafeDividePrices(int a, int b)
        {
            try
            {
                return a / b;
            }
            catch (DivideByZeroException)
            {
                return 28;
            }
        }

        public static void Main()
        {
            Console.WriteLine(SumValuesMisses(new[] { 14, 50, 2, 26 }));
            Console.WriteLine(ClampOrders(74, 10, 50));
            Console.WriteLine(CountMatchesSamples(new[] { 5, 33, 37, 41, 44 }, 5));
            Console.WriteLine(CountMatchesPages(new[] { 44, 4, 6, 27, 45 }, 44));
            Console.WriteLine(FibonacciScores(4));
            Console.WriteLine(new CounterLevels(78).Increment(1));
            Console.WriteLine(CountMatchesTokens(new[] { 5, 48, 27 }, 5));
            Console.WriteLine(MaxValueScores(new[] { 31, 17, 1 }));
            Console.WriteLine(SafeDividePrices(28, 45));
            Console.WriteLine(Math.PI);
        }
    }
}
