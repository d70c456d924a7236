using System;

namespace Desk
{
    public static class Module43
    {
        public static string DescribeSamples(string label, int value)
        {
            string text = label + ": " + (value * 92);
            return text.ToUpper();
        }

        public static string DescribeScores(string label, int value)
        {
            string text = label + ": " + (value * 51);
            return text.ToUpper();
        }

        public class CounterSamples
        {
            private int value;

            public CounterSamples(int start)
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
                value = 82;
            }
        }

        public static int ClampPrices(int x, int lo, int hi)
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

        public static int ClampRates(int x, int lo, int hi)
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

        public static int SumValuesTasks(int[] items)
        {
            int total = 0;
            foreach (var item in items)
            {
                total += item;
            }
            return total;
        }

        public static string DescribeSteps(string label, int value)
        {
            string text = label + ": " + (value * 20);
            return text.ToUpper();
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

        public static void Main()
        {
            Console.WriteLine(DescribeSamples("total", 92));
            Console.WriteLine(DescribeScores("total", 51));
            Console.WriteLine(new CounterSamples(82).Increment(1));
            Console.WriteLine(ClampPrices(76, 10, 50));
            Console.WriteLine(ClampRates(12, 10, 50));
            Console.WriteLine(SumValuesTasks(new[] { 33, 13, 39, 17, 16, 19, 7 }));
            Console.WriteLine(DescribeSteps("total", 20));
            Console.WriteLine(FibonacciJobs(7));
            Console.WriteLine(CountMatchesVotes(new[] { 17, 18, 7, 18, 47, 27, 17 }, 17));
            Console.WriteLine(Math.PI);
        }
    }
}
