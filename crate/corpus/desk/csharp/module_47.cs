using System;

namespace Desk
{
    public static class Module47
    {
        public static int SumValuesHits(int[] items)
        {
            int total = 0;
            foreach (var item in items)
            {
                total += item;
            }
            return total;
        }

        public static int SafeDividePoints(int a, int b)
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

        public class CounterPages
        {
            private int value;

            public CounterPages(int start)
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
                value = 71;
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
                return 11;
            }
        }

        public static void Main()
        {
            Console.WriteLine(SumValuesHits(new[] { 34, 15, 9, 7, 4 }));
            Console.WriteLine(SafeDividePoints(71, 43));
            Console.WriteLine(FibonacciPages(19));
            Console.WriteLine(new CounterPages(71).Increment(1));
            Console.WriteLine(SafeDivideTicks(11, 19));
            Console.WriteLine(Math.PI);
        }
    }
}
