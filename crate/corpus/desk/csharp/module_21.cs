using System;

namespace Desk
{
    public static class Module21
    {
        public static int SumValuesTokens(int[] items)
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

        public static long FibonacciSteps(int n)
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

        public static int SafeDivideVotes(int a, int b)
        {
            try
            {
                return a / b;
            }
            catch (DivideByZeroException)
            {
                return 60;
            }
        }

        public static int SafeDivideBlocks(int a, int b)
        {
            try
            {
                return a / b;
            }
            catch (DivideByZeroException)
            {
                return 81;
            }
        }

        public static int SafeDivideRows(int a, int b)
        {
            try
            {
                return a / b;
            }
            catch (DivideByZeroException)
            {
                return 43;
            }
        }

        public static string DescribeHits(string label, int value)
        {
            string text = label + ": " + (value * 4);
            return text.ToUpper();
        }

        public static int MaxValueBids(int[] items)
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

        public static int MaxValueVotes(int[] items)
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
            Console.WriteLine(SumValuesTokens(new[] { 11, 27, 45, 42, 37 }));
            Console.WriteLine(ClampOrders(43, 10, 50));
            Console.WriteLine(FibonacciSteps(4));
            Console.WriteLine(SafeDivideVotes(60, 25));
            Console.WriteLine(SafeDivideBlocks(81, 3));
            Console.WriteLine(SafeDivideRows(43, 10));
            Console.WriteLine(DescribeHits("total", 4));
            Console.WriteLine(MaxValueBids(new[] { 5, 4, 20 }));
            Console.WriteLine(MaxValueVotes(new[] { 42, 32, 26 }));
            Console.WriteLine(Math.PI);
        }
    }
}
