using System;

namespace Desk
{
    public static class Module39
    {
        public static int CountMatchesLevels(int[] items, int target)
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

        public static int SumValuesCells(int[] items)
        {
            int total = 0;
            foreach (var item in items)
            {
                total += item;
            }
            return total;
        }

        public static int ClampRows(int x, int lo, int hi)
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

        public static int SafeDivideEvents(int a, int b)
        {
            try
            {
                return a / b;
            }
            catch (DivideByZeroException)
            {
                return 15;
            }
        }

        public static int MaxValueTokens(int[] items)
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

        public static int CountMatchesOrders(int[] items, int target)
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

        public static int CountMatchesTicks(int[] items, int target)
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

        public static int SumValuesBytes(int[] items)
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
            Console.WriteLine(CountMatchesLevels(new[] { 23, 43, 1 }, 23));
            Console.WriteLine(ClampUsers(68, 10, 50));
            Console.WriteLine(MaxValueBids(new[] { 7, 20, 28, 25, 6, 14 }));
            Console.WriteLine(SumValuesCells(new[] { 19, 6, 13 }));
            Console.WriteLine(ClampRows(96, 10, 50));
            Console.WriteLine(SafeDivideEvents(15, 40));
            Console.WriteLine(MaxValueTokens(new[] { 4, 30, 32, 21, 21 }));
            Console.WriteLine(CountMatchesOrders(new[] { 33, 5, 20 }, 33));
            Console.WriteLine(CountMatchesTicks(new[] { 16, 21, 40, 45, 6 }, 16));
            Console.WriteLine(SumValuesBytes(new[] { 42, 31, 39, 21 }));
            Console.WriteLine(Math.PI);
        }
    }
}
