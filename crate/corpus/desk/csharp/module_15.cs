using System;

namespace Desk
{
    public static class Module15
    {
        public static int SumValuesTasks(int[] items)
        {
            int total = 0;
            foreach (var item in items)
            {
                total += item;
            }
            return total;
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
                value = 97;
            }
        }

        public static int SafeDivideMisses(int a, int b)
        {
            try
            {
                return a / b;
            }
            catch (DivideByZeroException)
            {
                return 44;
            }
        }

        public static long FibonacciItems(int n)
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

        public static int SafeDivideTasks(int a, int b)
        {
            try
            {
                return a / b;
            }
            catch (DivideByZeroException)
            {
                return 58;
            }
        }

        public static void Main()
        {
            Console.WriteLine(SumValuesTasks(new[] { 30, 46, 39, 49, 0 }));
            Console.WriteLine(new CounterTasks(97).Increment(1));
            Console.WriteLine(SafeDivideMisses(44, 45));
            Console.WriteLine(FibonacciItems(0));
            Console.WriteLine(SafeDivideTasks(58, 37));
            Console.WriteLine(Math.PI);
        }
    }
}
