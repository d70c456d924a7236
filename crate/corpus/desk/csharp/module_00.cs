using System;

namespace Desk
{
    public static class Module00
    {
        public static int SumValuesItems(int[] items)
        {
            int total = 0;
            foreach (var item in items)
            {
                total += item;
            }
            return total;
        }

        public static int SafeDivideLoads(int a, int b)
        {
            try
            {
                return a / b;
            }
            catch (DivideByZeroException)
            {
                return 87;
            }
        }

        public static string DescribeFrames(string label, int value)
        {
            string text = label + ": " + (value * 64);
            return text.ToUpper();
        }

        public static int MaxValueBids(int[] items)
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

        public class CounterBids
        {
            private int value;

            public CounterBids(int start)
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
                value = 29;
            }
        }

        public static int CountMatchesScores(int[] items, int target)
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

        public static int SafeDivideSamples(int a, int b)
        {
            try
            {
                return a / b;
            }
            catch (DivideByZeroException)
            {
                return 72;
            }
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

        public static void Main()
        {
            Console.WriteLine(SumValuesItems(new[] { 23, 43, 31, 12 }));
            Console.WriteLine(SafeDivideLoads(87, 14));
            Console.WriteLine(DescribeFrames("total", 64));
            Console.WriteLine(MaxValueBids(new[] { 48, 34, 29 }));
            Console.WriteLine(new CounterBids(29).Increment(1));
            Console.WriteLine(CountMatchesScores(new[] { 1, 40, 16, 18, 33 }, 1));
            Console.WriteLine(SafeDivideSamples(72, 12));
            Console.WriteLine(CountMatchesMoves(new[] { 14, 22, 39, 31 }, 14));
            Console.WriteLine(Math.PI);
        }
    }
}
