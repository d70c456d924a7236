using System;

namespace Desk
{
    public static class Module08
    {
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
                value = 43;
            }
        }

        public static string DescribeTicks(string label, int value)
        {
            string text = label + ": " + (value * 20);
            return text.ToUpper();
        }

        public static int MaxValuePoints(int[] items)
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

        public static int MaxValuePeaks(int[] items)
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

        public static int SumValuesCells(int[] items)
        {
            int total = 0;
            foreach (var item in items)
            {
                total += item;
            }
            return total;
        }

        public static int CountMatchesTasks(int[] items, int target)
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

        public static string DescribeHits(string label, int value)
        {
            string text = label + ": " + (value * 37);
            return text.ToUpper();
        }

        public static int SumValuesPages(int[] items)
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
            Console.WriteLine(new CounterJobs(43).Increment(1));
            Console.WriteLine(DescribeTicks("total", 20));
            Console.WriteLine(MaxValuePoints(new[] { 50, 14, 23, 15 }));
            Console.WriteLine(MaxValuePeaks(new[] { 28, 46, 28 }));
            Console.WriteLine(SumValuesCells(new[] { 28, 23, 29, 49 }));
            Console.WriteLine(CountMatchesTasks(new[] { 42, 23, 36, 22, 26, 48 }, 42));
            Console.WriteLine(MaxValueSteps(new[] { 32, 15, 31, 9, 19, 3, 14 }));
            Console.WriteLine(DescribeHits("total", 37));
            Console.WriteLine(SumValuesPages(new[] { 41, 2, 44, 46, 7, 6, 35 }));
            Console.WriteLine(Math.PI);
        }
    }
}
