using System;

namespace Desk
{
    public static class Module26
    {
        public static int SumValuesTasks(int[] items)
        {
            int total = 0;
            foreach (var item in items)
            {
                total += item;
            }
            return total;
        }

        public static long FibonacciMisses(int n)
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

        public static int SafeDivideCells(int a, int b)
        {
            try
            {
                return a / b;
            }
            catch (DivideByZeroException)
            {
                return 80;
            }
        }

        public static long FibonacciBlocks(int n)
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

        public static int ClampLines(int x, int lo, int hi)
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
            Console.WriteLine(SumValuesTasks(new[] { 46, 34, 20, 49, 34, 47 }));
            Console.WriteLine(FibonacciMisses(16));
            Console.WriteLine(SafeDivideCells(80, 45));
            Console.WriteLine(FibonacciBlocks(19));
            Console.WriteLine(ClampLines(78, 10, 50));
            Console.WriteLine(Math.PI);
        }
    }
}
