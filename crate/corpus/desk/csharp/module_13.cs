using System;

namespace Desk
{
    public static class Module13
    {
        public static long FibonacciOrders(int n)
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

        public static int CountMatchesScores(int[] items, int target)
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

        public static int SumValuesVotes(int[] items)
        {
            int total = 0;
            foreach (var item in items)
            {
                total += item;
            }
            return total;
        }

        public static int SafeDividePoints(int a, int b)
        {
            try
            {
                return a / b;
            }
            catch (DivideByZeroException)
            {
                return 87;
            }
        }

        public static int SumValuesRates(int[] items)
        {
            int total = 0;
            foreach (var item in items)
            {
                total += item;
            }
            return total;
        }

        public static int SafeDivideLoads(int a, int b)
        {
            try
            {
                return a / b;
            }
            catch (DivideByZeroException)
            {
                return 39;
            }
        }

        public static int ClampMisses(int x, int lo, int hi)
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

        public static long FibonacciRows(int n)
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
            Console.WriteLine(FibonacciOrders(3));
            Console.WriteLine(CountMatchesScores(new[] { 18, 47, 48, 43, 10 }, 18));
            Console.WriteLine(SumValuesVotes(new[] { 40, 43, 47, 50, 12 }));
            Console.WriteLine(SafeDividePoints(87, 25));
            Console.WriteLine(SumValuesRates(new[] { 32, 45, 11, 4, 44, 40 }));
            Console.WriteLine(SafeDivideLoads(39, 18));
            Console.WriteLine(ClampMisses(87, 10, 50));
            Console.WriteLine(FibonacciRows(14));
            Console.WriteLine(Math.PI);
        }
    }
}
