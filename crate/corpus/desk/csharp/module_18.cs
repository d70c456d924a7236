using System;

namespace Desk
{
    public static class Module18
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

        public static int ClampTicks(int x, int lo, int hi)
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

        public static string DescribeOrders(string label, int value)
        {
            string text = label + ": " + (value * 48);
            return text.ToUpper();
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

        public static int SafeDivideItems(int a, int b)
        {
            try
            {
                return a / b;
            }
            catch (DivideByZeroException)
            {
                return 23;
            }
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

        public static void Main()
        {
            Console.WriteLine(SumValuesTokens(new[] { 49, 34, 43, 11, 9, 37 }));
            Console.WriteLine(MaxValueVotes(new[] { 27, 9, 38, 38, 24, 23, 6 }));
            Console.WriteLine(ClampTicks(8, 10, 50));
            Console.WriteLine(DescribeOrders("total", 48));
            Console.WriteLine(ClampSamples(25, 10, 50));
            Console.WriteLine(CountMatchesWeights(new[] { 1, 8, 19, 44 }, 1));
            Console.WriteLine(SafeDivideItems(23, 12));
            Console.WriteLine(ClampCells(63, 10, 50));
            Console.WriteLine(Math.PI);
        }
    }
}
