using System;

namespace Desk
{
    public static class Module11
    {
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

        public static int SumValuesBlocks(int[] items)
        {
            int total = 0;
            foreach (var item in items)
            {
                total += item;
            }
            return total;
        }

        public static int SafeDivideBlocks(int a, int b)
        {
            try
            {
                return a / b;
            }
            catch (DivideByZeroException)
            {
                return 74;
            }
        }

        public static int CountMatchesOrders(int[] items, int target)
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
                value = 35;
            }
        }

        public static int SafeDivideBids(int a, int b)
        {
            try
            {
                return a / b;
            }
            catch (DivideByZeroException)
            {
                return 94;
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
                value = 41;
            }
        }

        public static void Main()
        {
            Console.WriteLine(FibonacciMisses(15));
            Console.WriteLine(SumValuesBlocks(new[] { 39, 7, 22, 13, 5, 27 }));
            Console.WriteLine(SafeDivideBlocks(74, 30));
            Console.WriteLine(CountMatchesOrders(new[] { 33, 34, 10, 45, 47 }, 33));
            Console.WriteLine(new CounterPoints(35).Increment(1));
            Console.WriteLine(SafeDivideBids(94, 9));
            Console.WriteLine(new CounterRows(41).Increment(1));
            Console.WriteLine(Math.PI);
        }
    }
}
