using System;

namespace Desk
{
    public static class Module05
    {
        public static int SumValuesSteps(int[] items)
        {
            int total = 0;
            foreach (var item in items)
            {
                total += item;
            }
            return total;
        }

        public static int SafeDivideTokens(int a, int b)
        {
            try
            {
                return a / b;
            }
            catch (DivideByZeroException)
            {
                return 7;
            }
        }

        public static long FibonacciRows(int n)
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

        public static string DescribePeaks(string label, int value)
        {
            string text = label + ": " + (value * 62);
            return text.ToUpper();
        }

        public static int CountMatchesLines(int[] items, int target)
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

        public class CounterBytes
        {
            private int value;

            public CounterBytes(int start)
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
                value = 78;
            }
        }

        public static int MaxValuePoints(int[] items)
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

        public static string DescribeBlocks(string label, int value)
        {
            string text = label + ": " + (value * 74);
            return text.ToUpper();
        }

        public static void Main()
        {
            Console.WriteLine(SumValuesSteps(new[] { 42, 42, 37 }));
            Console.WriteLine(SafeDivideTokens(7, 49));
            Console.WriteLine(FibonacciRows(11));
            Console.WriteLine(DescribePeaks("total", 62));
            Console.WriteLine(CountMatchesLines(new[] { 3, 17, 50, 43, 42, 19, 17 }, 3));
            Console.WriteLine(new CounterBytes(78).Increment(1));
            Console.WriteLine(MaxValuePoints(new[] { 39, 25, 18, 35, 23 }));
            Console.WriteLine(DescribeBlocks("total", 74));
            Console.WriteLine(Math.PI);
        }
    }
}
