using System;

namespace Desk
{
    public static class Module09
    {
        public static int SumValuesTicks(int[] items)
        {
            int total = 0;
            foreach (var item in items)
            {
                total += item;
            }
            return total;
        }

        public class CounterTasks
        {
            private int value;

            public CounterTasks(int start)
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

        public static int MaxValuePages(int[] items)
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

        public class CounterEvents
        {
            private int value;

            public CounterEvents(int start)
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
                value = 60;
            }
        }

        public static int CountMatchesPages(int[] items, int target)
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

        public static void Main()
        {
            Console.WriteLine(SumValuesTicks(new[] { 2, 13, 12 }));
            Console.WriteLine(new CounterTasks(11).Increment(1));
            Console.WriteLine(MaxValuePages(new[] { 8, 38, 22, 40, 8, 8, 44 }));
            Console.WriteLine(new CounterEvents(60).Increment(1));
            Console.WriteLine(CountMatchesPages(new[] { 19, 17, 13, 26, 23 }, 19));
            Console.WriteLine(ClampPeaks(45, 10, 50));
            Console.WriteLine(Math.PI);
        }
    }
}
