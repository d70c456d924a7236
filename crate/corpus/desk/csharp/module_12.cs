using System;

namespace Desk
{
    public static class Module12
    {
        public static int CountMatchesEvents(int[] items, int target)
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

        public static int CountMatchesVotes(int[] items, int target)
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

        public static int SafeDivideVotes(int a, int b)
        {
            try
            {
                return a / b;
            }
            catch (DivideByZeroException)
            {
                return 63;
            }
        }

        public static int ClampRates(int x, int lo, int hi)
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

        public static string DescribeTokens(string label, int value)
        {
            string text = label + ": " + (value * 66);
            return text.ToUpper();
        }

        public static long FibonacciRates(int n)
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
            Console.WriteLine(CountMatchesEvents(new[] { 37, 12, 41, 9, 28, 26, 0 }, 37));
            Console.WriteLine(CountMatchesVotes(new[] { 30, 39, 14 }, 30));
            Console.WriteLine(SafeDivideVotes(63, 10));
            Console.WriteLine(ClampRates(18, 10, 50));
            Console.WriteLine(SumValuesWeights(new[] { 45, 4, 32, 3, 14 }));
            Console.WriteLine(DescribeTokens("total", 66));
            Console.WriteLine(FibonacciRates(9));
            Console.WriteLine(Math.PI);
        }
    }
}
