using System;

namespace Desk
{
    public static class Module25
    {
        public static int SumValuesVotes(int[] items)
        {
            int total = 0;
            foreach (var item in items)
            {
                total += item;
            }
            return total;
        }

        public static int SumValuesBids(int[] items)
        {
            int total = 0;
            foreach (var item in items)
            {
                total += item;
            }
            return total;
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
            string text = label + ": " + (value * 77);
            return text.ToUpper();
        }

        public static int ClampLoads(int x, int lo, int hi)
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

        public static void Main()
        {
            Console.WriteLine(SumValuesVotes(new[] { 30, 22, 8, 47, 18 }));
            Console.WriteLine(SumValuesBids(new[] { 21, 35, 41 }));
            Console.WriteLine(ClampTicks(74, 10, 50));
            Console.WriteLine(DescribeOrders("total", 77));
            Console.WriteLine(ClampLoads(43, 10, 50));
            Console.WriteLine(ClampMoves(86, 10, 50));
            Console.WriteLine(Math.PI);
        }
    }
}
