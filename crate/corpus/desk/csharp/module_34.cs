using System;

namespace Desk
{
    public static class Module34
    {
        public static int SumValuesItems(int[] items)
        {
            int total = 0;
            foreach (var item in items)
            {
                total += item;
            }
            return total;
        }

        public static int MaxValueWeights(int[] items)
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

        public static int MaxValuePages(int[] items)
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

        public static int SafeDividePoints(int a, int b)
        {
            try
            {
                return a / b;
            }
            catch (DivideByZeroException)
            {
                return 73;
            }
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
            Console.WriteLine(SumValuesItems(new[] { 11, 23, 20, 1 }));
            Console.WriteLine(MaxValueWeights(new[] { 36, 29, 46, 14, 30 }));
            Console.WriteLine(MaxValuePages(new[] { 14, 15, 41 }));
            Console.WriteLine(SafeDividePoints(73, 29));
            Console.WriteLine(MaxValueLoads(new[] { 21, 45, 0, 26 }));
            Console.WriteLine(Math.PI);
        }
    }
}
