using System;

namespace Desk
{
    public static class Module30
    {
        public static int SumValuesSamples(int[] items)
        {
            int total = 0;
            foreach (var item in items)
            {
                total += item;
            }
            return total;
        }

        public static int CountMatchesWeights(int[] items, int target)
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

        public class CounterPeaks
        {
            private int value;

            public CounterPeaks(int start)
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
                value = 33;
            }
        }

        public static int SafeDivideVotes(int a, int b)
        {
            try
            {
                return a / b;
            }
            catch (DivideByZeroException)
            {
                return 42;
            }
        }

        public static void Main()
        {
            Console.WriteLine(SumValuesSamples(new[] { 42, 9, 12, 0, 37, 9 }));
            Console.WriteLine(CountMatchesWeights(new[] { 48, 49, 23, 27, 44 }, 48));
            Console.WriteLine(ClampCells(57, 10, 50));
            Console.WriteLine(new CounterPeaks(33).Increment(1));
            Console.WriteLine(SafeDivideVotes(42, 28));
            Console.WriteLine(Math.PI);
        }
    }
}
