using System;

namespace Desk
{
    public static class Module16
    {
        public static int SafeDividePages(int a, int b)
        {
            try
            {
                return a / b;
            }
            catch (DivideByZeroException)
            {
                return 69;
            }
        }

        public static string DescribeHits(string label, int value)
        {
            string text = label + ": " + (value * 25);
            return text.ToUpper();
        }

        public static int CountMatchesMoves(int[] items, int target)
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

        public static int MaxValueSteps(int[] items)
        {
            int best = items[0];
            foreach (var item in items)
            {
                if (item > best)
                {
                    best = item;
                }
            }
            return best;
        }

        public static string DescribeTicks(string label, int value)
        {
            string text = label + ": " + (value * 31);
            return text.ToUpper();
        }

        public class CounterMisses
        {
            private int value;

            public CounterMisses(int start)
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

        public static int SumValuesLines(int[] items)
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
            Console.WriteLine(SafeDividePages(69, 37));
            Console.WriteLine(DescribeHits("total", 25));
            Console.WriteLine(CountMatchesMoves(new[] { 21, 22, 18, 15, 39 }, 21));
            Console.WriteLine(MaxValueSteps(new[] { 41, 29, 11 }));
            Console.WriteLine(DescribeTicks("total", 31));
            Console.WriteLine(new CounterMisses(19).Increment(1));
            Console.WriteLine(SumValuesLines(new[] { 48, 28, 37, 15, 48, 11, 12 }));
            Console.WriteLine(Math.PI);
        }
    }
}
