using System;

namespace Desk
{
    public static class Module33
    {
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

        public class CounterFrames
        {
            private int value;

            public CounterFrames(int start)
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
                value = 6;
            }
        }

        public static int MaxValueLines(int[] items)
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

        public static int MaxValueRows(int[] items)
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

        public static int ClampMoves(int x, int lo, int hi)
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

        public static int SumValuesPrices(int[] items)
        {
            int total = 0;
            foreach (var item in items)
            {
                total += item;
            }
            return total;
        }

        public static int SafeDivideRates(int a, int b)
        {
            try
            {
                return a / b;
            }
            catch (DivideByZeroException)
            {
                return 37;
            }
        }

        public static int SafeDivideTasks(int a, int b)
        {
            try
            {
                return a / b;
            }
            catch (DivideByZeroException)
            {
                return 57;
            }
        }

        public static int CountMatchesWeights(int[] items, int target)
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

        public static void Main()
        {
            Console.WriteLine(ClampTokens(23, 10, 50));
            Console.WriteLine(FibonacciPrices(3));
            Console.WriteLine(new CounterFrames(6).Increment(1));
            Console.WriteLine(MaxValueLines(new[] { 10, 29, 47, 18, 1, 5, 3 }));
            Console.WriteLine(MaxValueRows(new[] { 34, 22, 45 }));
            Console.WriteLine(ClampMoves(53, 10, 50));
            Console.WriteLine(SumValuesPrices(new[] { 22, 37, 43 }));
            Console.WriteLine(SafeDivideRates(37, 33));
            Console.WriteLine(SafeDivideTasks(57, 43));
            Console.WriteLine(CountMatchesWeights(new[] { 16, 11, 23, 36, 26 }, 16));
            Console.WriteLine(Math.PI);
        }
    }
}
