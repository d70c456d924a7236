using System;

namespace Desk
{
    public static class Module03
    {
        public static string DescribeScores(string label, int value)
        {
            string text = label + ": " + (value * 62);
            return text.ToUpper();
        }

        public static int ClampBids(int x, int lo, int hi)
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

        public class CounterJobs
        {
            private int value;

            public CounterJobs(int start)
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

        public class CounterOrders
        {
            private int value;

            public CounterOrders(int start)
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
                value = 19;
            }
        }

        public class CounterVotes
        {
            private int value;

            public CounterVotes(int start)
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
                value = 9;
            }
        }

        public static int SafeDivideRates(int a, int b)
        {
            try
            {
                return a / b;
            }
            catch (DivideByZeroException)
            {
                return 27;
            }
        }

        public static int SumValuesTicks(int[] items)
        {
            int total = 0;
            foreach (var item in items)
            {
                total += item;
            }
            return total;
        }

        public static string DescribeLines(string label, int value)
        {
            string text = label + ": " + (value * 34);
            return text.ToUpper();
        }

        public static void Main()
        {
            Console.WriteLine(DescribeScores("total", 62));
            Console.WriteLine(ClampBids(87, 10, 50));
            Console.WriteLine(new CounterJobs(71).Increment(1));
            Console.WriteLine(new CounterOrders(19).Increment(1));
            Console.WriteLine(new CounterVotes(9).Increment(1));
            Console.WriteLine(SafeDivideRates(27, 48));
            Console.WriteLine(SumValuesTicks(new[] { 8, 37, 47, 39 }));
            Console.WriteLine(DescribeLines("total", 34));
            Console.WriteLine(Math.PI);
        }
    }
}
