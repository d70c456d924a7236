using System;

namespace Desk
{
    public static class Module20
    {
        public static int SumValuesSamples(int[] items)
        {
            int total = 0;
            foreach (var item in items)
            {
                total += item;
            }
            return total;
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
                value = 8;
            }
        }

        public static int SafeDivideBytes(int a, int b)
        {
            try
            {
                return a / b;
            }
            catch (DivideByZeroException)
            {
                return 77;
            }
        }

        public static int CountMatchesSamples(int[] items, int target)
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

        public static long FibonacciWeights(int n)
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

        public static void Main()
        {
            Console.WriteLine(SumValuesSamples(new[] { 17, 23, 26, 33, 33, 17, 19 }));
            Console.WriteLine(new CounterBytes(8).Increment(1));
            Console.WriteLine(SafeDivideBytes(77, 5));
            Console.WriteLine(CountMatchesSamples(new[] { 5, 40, 31, 0, 24, 25, 14 }, 5));
            Console.WriteLine(FibonacciWeights(18));
            Console.WriteLine(Math.PI);
        }
    }
}
