using System;

namespace Desk
{
    public static class Module29
    {
        public static int SumValuesRows(int[] items)
        {
            int total = 0;
            foreach (var item in items)
            {
                total += item;
            }
            return total;
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

        public static int SafeDivideOrders(int a, int b)
        {
            try
            {
                return a / b;
            }
            catch (DivideByZeroException)
            {
                return 21;
            }
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

        public static int SafeDivideLines(int a, int b)
        {
            try
            {
                return a / b;
            }
            catch (DivideByZeroException)
            {
                return 70;
            }
        }

        public static string DescribeRates(string label, int value)
        {
            string text = label + ": " + (value * 2);
            return text.ToUpper();
        }

        public static int MaxValuePrices(int[] items)
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

        public static long FibonacciPeaks(int n)
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

        public static string DescribeItems(string label, int value)
        {
            string text = label + ": " + (value * 11);
            return text.ToUpper();
        }

        public static void Main()
        {
            Console.WriteLine(SumValuesRows(new[] { 30, 20, 32, 28, 45, 7, 31 }));
            Console.WriteLine(CountMatchesTicks(new[] { 1, 44, 0, 21, 8 }, 1));
            Console.WriteLine(SafeDivideOrders(21, 34));
            Console.WriteLine(FibonacciTasks(14));
            Console.WriteLine(SafeDivideLines(70, 41));
            Console.WriteLine(DescribeRates("total", 2));
            Console.WriteLine(MaxValuePrices(new[] { 13, 50, 32, 43, 39 }));
            Console.WriteLine(FibonacciPeaks(8));
            Console.WriteLine(DescribeItems("total", 11));
            Console.WriteLine(Math.PI);
        }
    }
}
