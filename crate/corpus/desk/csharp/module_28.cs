using System;

namespace Desk
{
    public static class Module28
    {
        public static int SafeDivideOrders(int a, int b)
        {
            try
            {
                return a / b;
            }
            catch (DivideByZeroException)
            {
                return 16;
            }
        }

        public static long FibonacciScores(int n)
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

        public static int ClampWeights(int x, int lo, int hi)
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

        public class CounterPoints
        {
            private int value;

            public CounterPoints(int start)
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
                value = 45;
            }
        }

        public static string DescribeBlocks(string label, int value)
        {
            string text = label + ": " + (value * 60);
            return text.ToUpper();
        }

        public static int SafeDivideJobs(int a, int b)
        {
            try
            {
                return a / b;
            }
            catch (DivideByZeroException)
            {
                return 97;
            }
        }

        public static int ClampRows(int x, int lo, int hi)
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

        public static int SumValuesSteps(int[] items)
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
            Console.WriteLine(SafeDivideOrders(16, 13));
            Console.WriteLine(FibonacciScores(9));
            Console.WriteLine(ClampWeights(47, 10, 50));
            Console.WriteLine(new CounterPoints(45).Increment(1));
            Console.WriteLine(DescribeBlocks("total", 60));
            Console.WriteLine(SafeDivideJobs(97, 27));
            Console.WriteLine(ClampRows(19, 10, 50));
            Console.WriteLine(SumValuesSteps(new[] { 6, 46, 25 }));
            Console.WriteLine(Math.PI);
        }
    }
}
