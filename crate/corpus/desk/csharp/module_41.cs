using System;

namespace Desk
{
    public static class Module41
    {
        public static int CountMatchesFrames(int[] items, int target)
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

        public class CounterUsers
        {
            private int value;

            public CounterUsers(int start)
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
                value = 88;
            }
        }

        public static int SafeDivideTasks(int a, int b)
        {
            try
            {
                return a / b;
            }
            catch (DivideByZeroException)
            {
                return 74;
            }
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

        public static int ClampWeights(int x, int lo, int hi)
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

        public static int MaxValueHits(int[] items)
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

        public static int MaxValueWeights(int[] items)
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
            Console.WriteLine(CountMatchesFrames(new[] { 13, 9, 29, 29, 14, 5, 29 }, 13));
            Console.WriteLine(new CounterUsers(88).Increment(1));
            Console.WriteLine(SafeDivideTasks(74, 37));
            Console.WriteLine(SumValuesVotes(new[] { 30, 33, 23, 42, 15, 25, 42 }));
            Console.WriteLine(ClampWeights(68, 10, 50));
            Console.WriteLine(MaxValueHits(new[] { 23, 4, 31 }));
            Console.WriteLine(ClampLevels(85, 10, 50));
            Console.WriteLine(MaxValueWeights(new[] { 26, 18, 40, 14, 48 }));
            Console.WriteLine(Math.PI);
        }
    }
}
