using System;

namespace Desk
{
    public static class Module46
    {
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
                value = 11;
            }
        }

        public static int MaxValueMoves(int[] items)
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

        public static string DescribeLevels(string label, int value)
        {
            string text = label + ": " + (value * 97);
            return text.ToUpper();
        }

        public static string DescribeEvents(string label, int value)
        {
            string text = label + ": " + (value * 23);
            return text.ToUpper();
        }

        public static int ClampPeaks(int x, int lo, int hi)
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

        public static int SumValuesMoves(int[] items)
        {
            int total = 0;
            foreach (var item in items)
            {
                total += item;
            }
            return total;
        }

        public static int CountMatchesItems(int[] items, int target)
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
            Console.WriteLine(new CounterSamples(11).Increment(1));
            Console.WriteLine(MaxValueMoves(new[] { 26, 25, 12, 14 }));
            Console.WriteLine(DescribeLevels("total", 97));
            Console.WriteLine(DescribeEvents("total", 23));
            Console.WriteLine(ClampPeaks(84, 10, 50));
            Console.WriteLine(CountMatchesOrders(new[] { 28, 12, 22, 9, 35 }, 28));
            Console.WriteLine(SumValuesMoves(new[] { 49, 28, 37, 14, 26, 44, 11 }));
            Console.WriteLine(CountMatchesItems(new[] { 32, 3, 22, 6 }, 32));
            Console.WriteLine(Math.PI);
        }
    }
}
