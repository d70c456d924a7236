using System;

namespace Desk
{
    public static class Module22
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

        public static string DescribeFrames(string label, int value)
        {
            string text = label + ": " + (value * 37);
            return text.ToUpper();
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

        public static int SafeDivideMoves(int a, int b)
        {
            try
            {
                return a / b;
            }
            catch (DivideByZeroException)
            {
                return 76;
            }
        }

        public static int MaxValueHits(int[] items)
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

        public static string DescribeLoads(string label, int value)
        {
            string text = label + ": " + (value * 69);
            return text.ToUpper();
        }

        public static void Main()
        {
            Console.WriteLine(SumValuesItems(new[] { 48, 17, 30 }));
            Console.WriteLine(DescribeFrames("total", 37));
            Console.WriteLine(MaxValuePages(new[] { 37, 10, 2, 20 }));
            Console.WriteLine(SafeDivideMoves(76, 44));
            Console.WriteLine(MaxValueHits(new[] { 38, 7, 5, 43, 6, 15 }));
            Console.WriteLine(DescribeLoads("total", 69));
            Console.WriteLine(Math.PI);
        }
    }
}
