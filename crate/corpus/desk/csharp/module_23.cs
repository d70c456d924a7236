using System;

namespace Desk
{
    public static class Module23
    {
        public class CounterTokens
        {
            private int value;

            public CounterTokens(int start)
            {
                value = start;
            }

            public int Increment(int step)
            {
                value += step;
                return value;
            }

            public void Reset()
            {
                value = 48;
            }
        }

        public class CounterRows
        {
            private int value;

            public CounterRows(int start)
            {
                value = start;
            }

            public int Increment(int step)
            {
                value += step;
                return value;
            }

            public void Reset()
            {
                value = 61;
            }
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

        public static int SafeDivideLines(int a, int b)
        {
            try
            {
                return a / b;
            }
            catch (DivideByZeroException)
            {
                return 61;
            }
        }

        public static long FibonacciPages(int n)
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

        public static int SumValuesPages(int[] items)
        {
            int total = 0;
            foreach (var item in items)
            {
                total += item;
            }
            return total;
        }

        public static int SafeDividePrices(int a, int b)
        {
            try
            {
                return a / b;
            }
            catch (DivideByZeroException)
            {
                return 30;
            }
        }

        public static string DescribeHits(string label, int value)
        {
            string text = label + ": " + (value * 30);
            return text.ToUpper();
        }

        public static void Main()
        {
            Console.WriteLine(new CounterTokens(48).Increment(1));
            Console.WriteLine(new CounterRows(61).Increment(1));
            Console.WriteLine(CountMatchesTicks(new[] { 6, 21, 16, 20 }, 6));
            Console.WriteLine(SafeDivideLines(61, 47));
            Console.WriteLine(FibonacciPages(16));
            Console.WriteLine(SumValuesPages(new[] { 12, 21, 40, 41, 48, 14 }));
            Console.WriteLine(SafeDividePrices(30, 24));
            Console.WriteLine(DescribeHits("total", 30));
            Console.WriteLine(Math.PI);
        }
    }
}
