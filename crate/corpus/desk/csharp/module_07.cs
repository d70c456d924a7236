using System;

namespace Desk
{
    public static class Module07
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

        public static int CountMatchesLoads(int[] items, int target)
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

        public static int ClampBytes(int x, int lo, int hi)
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

        public static int SumValuesMoves(int[] items)
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
            Console.WriteLine(CountMatchesEvents(new[] { 3, 28, 37, 18, 46, 39, 2 }, 3));
            Console.WriteLine(FibonacciPrices(17));
            Console.WriteLine(CountMatchesLoads(new[] { 17, 44, 41 }, 17));
            Console.WriteLine(ClampBytes(39, 10, 50));
            Console.WriteLine(SumValuesMoves(new[] { 0, 3, 37, 28 }));
            Console.WriteLine(Math.PI);
        }
    }
}
