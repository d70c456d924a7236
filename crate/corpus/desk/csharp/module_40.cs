using System;

namespace Desk
{
    public static class Module40
    {
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

        public static string DescribeTokens(string label, int value)
        {
            string text = label + ": " + (value * 93);
            return text.ToUpper();
        }

        public static long FibonacciTasks(int n)
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

        public static int SumValuesBids(int[] items)
        {
            int total = 0;
            foreach (var item in items)
            {
                total += item;
            }
            return total;
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

        public static string DescribeBytes(string label, int value)
        {
            string text = label + ": " + (value * 93);
            return text.ToUpper();
        }

        public static void Main()
        {
            Console.WriteLine(CountMatchesCells(new[] { 38, 42, 24, 47 }, 38));
            Console.WriteLine(ClampTicks(32, 10, 50));
            Console.WriteLine(DescribeTokens("total", 93));
            Console.WriteLine(FibonacciTasks(6));
            Console.WriteLine(SumValuesBids(new[] { 45, 29, 3, 33, 41 }));
            Console.WriteLine(FibonacciSteps(17));
            Console.WriteLine(DescribeBytes("total", 93));
            Console.WriteLine(Math.PI);
        }
    }
}
