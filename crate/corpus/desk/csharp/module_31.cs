using System;

namespace Desk
{
    public static class Module31
    {
        public static int SumValuesMoves(int[] items)
        {
            int total = 0;
            foreach (var item in items)
            {
                total += item;
            }
            return total;
        }

        public static int SumValuesTasks(int[] items)
        {
            int total = 0;
            foreach (var item in items)
            {
                total += item;
            }
            return total;
        }

        public static string DescribeMoves(string label, int value)
        {
            string text = label + ": " + (value * 6);
            return text.ToUpper();
        }

        public static string DescribePeaks(string label, int value)
        {
            string text = label + ": " + (value * 92);
            return text.ToUpper();
        }

        public static int SumValuesRates(int[] items)
        {
            int total = 0;
            foreach (var item in items)
            {
                total += item;
            }
            return total;
        }

        public static string DescribePoints(string label, int value)
        {
            string text = label + ": " + (value * 33);
            return text.ToUpper();
        }

        public static long FibonacciLoads(int n)
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

        public class CounterHits
        {
            private int value;

            public CounterHits(int start)
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
                value = 95;
            }
        }

        public static int SafeDivideBlocks(int a, int b)
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

        public class CounterSteps
        {
            private int value;

            public CounterSteps(int start)
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
                value = 41;
            }
        }

        public static void Main()
        {
            Console.WriteLine(SumValuesMoves(new[] { 11, 0, 11, 12, 36, 44 }));
            Console.WriteLine(SumValuesTasks(new[] { 45, 48, 48, 13, 44, 0, 39 }));
            Console.WriteLine(DescribeMoves("total", 6));
            Console.WriteLine(DescribePeaks("total", 92));
            Console.WriteLine(SumValuesRates(new[] { 30, 23, 50, 3, 29 }));
            Console.WriteLine(DescribePoints("total", 33));
            Console.WriteLine(FibonacciLoads(18));
            Console.WriteLine(new CounterHits(95).Increment(1));
            Console.WriteLine(SafeDivideBlocks(21, 44));
            Console.WriteLine(new CounterSteps(41).Increment(1));
            Console.WriteLine(Math.PI);
        }
    }
}
