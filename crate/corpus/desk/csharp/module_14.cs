using System;

namespace Desk
{
    public static class Module14
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

        public static int ClampTasks(int x, int lo, int hi)
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

        public static long FibonacciJobs(int n)
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

        public static int SafeDividePeaks(int a, int b)
        {
            try
            {
                return a / b;
            }
            catch (DivideByZeroException)
            {
                return 71;
            }
        }

        public static int SafeDivideTicks(int a, int b)
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

        public class CounterTasks
        {
            private int value;

            public CounterTasks(int start)
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
                value = 58;
            }
        }

        public class CounterRates
        {
            private int value;

            public CounterRates(int start)
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
                value = 94;
            }
        }

        public static void Main()
        {
            Console.WriteLine(SumValuesRows(new[] { 37, 30, 6, 0, 13, 48 }));
            Console.WriteLine(ClampTasks(94, 10, 50));
            Console.WriteLine(FibonacciJobs(4));
            Console.WriteLine(SumValuesPages(new[] { 22, 32, 27, 5, 2, 21 }));
            Console.WriteLine(SafeDividePeaks(71, 11));
            Console.WriteLine(SafeDivideTicks(70, 14));
            Console.WriteLine(CountMatchesLines(new[] { 31, 13, 3 }, 31));
            Console.WriteLine(new CounterTasks(58).Increment(1));
            Console.WriteLine(new CounterRates(94).Increment(1));
            Console.WriteLine(Math.PI);
        }
    }
}
