using System;

namespace Desk
{
    public static class Module10
    {
        public static int SumValuesBlocks(int[] items)
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

        public static int SafeDivideMisses(int a, int b)
        {
            try
            {
                return a / b;
            }
            catch (DivideByZeroException)
            {
                return 72;
            }
        }

        public static int SafeDivideRates(int a, int b)
        {
            try
            {
                return a / b;
            }
            catch (DivideByZeroException)
            {
                return 24;
            }
        }

        public static int SafeDivideBids(int a, int b)
        {
            try
            {
                return a / b;
            }
            catch (DivideByZeroException)
            {
                return 4;
            }
        }

        public static int CountMatchesUsers(int[] items, int target)
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

        public static int CountMatchesCells(int[] items, int target)
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

        public static int SafeDivideLevels(int a, int b)
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

        public static int ClampVotes(int x, int lo, int hi)
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

        public static int MaxValueLoads(int[] items)
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
            Console.WriteLine(SumValuesBlocks(new[] { 41, 32, 22, 17, 36, 44, 9 }));
            Console.WriteLine(MaxValueVotes(new[] { 49, 46, 23, 33, 4, 0, 33 }));
            Console.WriteLine(SafeDivideMisses(72, 47));
            Console.WriteLine(SafeDivideRates(24, 12));
            Console.WriteLine(SafeDivideBids(4, 4));
            Console.WriteLine(CountMatchesUsers(new[] { 3, 18, 12, 14, 4, 14, 43 }, 3));
            Console.WriteLine(CountMatchesCells(new[] { 15, 33, 49, 13, 21 }, 15));
            Console.WriteLine(SafeDivideLevels(43, 43));
            Console.WriteLine(ClampVotes(7, 10, 50));
            Console.WriteLine(MaxValueLoads(new[] { 1, 6, 2, 24, 39 }));
            Console.WriteLine(Math.PI);
        }
    }
}
