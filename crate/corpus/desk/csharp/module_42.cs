using System;

namespace Desk
{
    public static class Module42
    {
        public static int CountMatchesVotes(int[] items, int target)
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

        public static string DescribeEvents(string label, int value)
        {
            string text = label + ": " + (value * 23);
            return text.ToUpper();
        }

        public static int SumValuesBytes(int[] items)
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
            string text = label + ": " + (value * 20);
            return text.ToUpper();
        }

        public static long FibonacciVotes(int n)
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
                value = 5;
            }
        }

        public static void Main()
        {
            Console.WriteLine(CountMatchesVotes(new[] { 30, 30, 10, 20 }, 30));
            Console.WriteLine(DescribeEvents("total", 23));
            Console.WriteLine(SumValuesBytes(new[] { 30, 33, 13, 48, 13, 13, 28 }));
            Console.WriteLine(DescribePoints("total", 20));
            Console.WriteLine(FibonacciVotes(10));
            Console.WriteLine(new CounterBytes(5).Increment(1));
            Console.WriteLine(Math.PI);
        }
    }
}
