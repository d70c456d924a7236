using System;

namespace Desk
{
    public static class Module36
    {
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

        public static int MaxValueTokens(int[] items)
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

        public static int SumValuesTicks(int[] items)
        {
            int total = 0;
            foreach (var item in items)
            {
                total += item;
            }
            return total;
        }

        public static int MaxValueRows(int[] items)
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

        public static string DescribeWeights(string label, int value)
        {
            string text = label + ": " + (value * 4);
            return text.ToUpper();
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
                value = 78;
            }
        }

        public static int CountMatchesLevels(int[] items, int target)
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

        public static int SumValuesLevels(int[] items)
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
            Console.WriteLine(MaxValueSteps(new[] { 6, 38, 32, 16, 30, 16, 8 }));
            Console.WriteLine(MaxValueTokens(new[] { 8, 1, 4, 11, 19, 45, 23 }));
            Console.WriteLine(SumValuesTicks(new[] { 9, 20, 0, 1, 7 }));
            Console.WriteLine(MaxValueRows(new[] { 22, 20, 34, 34, 50 }));
            Console.WriteLine(DescribeWeights("total", 4));
            Console.WriteLine(new CounterJobs(78).Increment(1));
            Console.WriteLine(CountMatchesLevels(new[] { 1, 14, 42 }, 1));
            Console.WriteLine(SumValuesLevels(new[] { 48, 31, 21, 25, 13, 37, 20 }));
            Console.WriteLine(Math.PI);
        }
    }
}
