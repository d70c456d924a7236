using System;

namespace Desk
{
    public static class Module04
    {
        public static int MaxValueMisses(int[] items)
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

        public static int ClampLevels(int x, int lo, int hi)
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

        public static int ClampCells(int x, int lo, int hi)
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

        public static string DescribeFrames(string label, int value)
        {
            string text = label + ": " + (value * 8);
            return text.ToUpper();
        }

        public static int SumValuesVotes(int[] items)
        {
            int total = 0;
            foreach (var item in items)
            {
                total += item;
            }
            return total;
        }

        public static int CountMatchesHits(int[] items, int target)
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

        public static string DescribeHits(string label, int value)
        {
            string text = label + ": " + (value * 24);
            return text.ToUpper();
        }

        public static int MaxValueJobs(int[] items)
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

        public static void Main()
        {
            Console.WriteLine(MaxValueMisses(new[] { 9, 45, 1 }));
            Console.WriteLine(ClampLevels(21, 10, 50));
            Console.WriteLine(ClampCells(5, 10, 50));
            Console.WriteLine(DescribeFrames("total", 8));
            Console.WriteLine(SumValuesVotes(new[] { 3, 45, 11, 42, 31, 27 }));
            Console.WriteLine(CountMatchesHits(new[] { 28, 10, 15, 29, 8, 11 }, 28));
            Console.WriteLine(DescribeHits("total", 24));
            Console.WriteLine(MaxValueJobs(new[] { 1, 38, 20, 9, 19, 28, 41 }));
            Console.WriteLine(Math.PI);
        }
    }
}
