using System;

namespace Desk
{
    public static class Module44
    {
        public static string DescribeLevels(string label, int value)
        {
            string text = label + ": " + (value * 72);
            return text.ToUpper();
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
                value = 44;
            }
        }

        public class CounterBytes
        {
            private int value;

            public CounterBytes(int start)
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

        public static int SumValuesPages(int[] items)
        {
            int total = 0;
            foreach (var item in items)
            {
                total += item;
            }
            return total;
        }

        public static int ClampUsers(int x, int lo, int hi)
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

        public static int CountMatchesLoads(int[] items, int target)
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
            Console.WriteLine(DescribeLevels("total", 72));
            Console.WriteLine(new CounterPeaks(44).Increment(1));
            Console.WriteLine(new CounterBytes(88).Increment(1));
            Console.WriteLine(SumValuesPages(new[] { 12, 14, 41, 43 }));
            Console.WriteLine(ClampUsers(33, 10, 50));
            Console.WriteLine(CountMatchesLoads(new[] { 22, 41, 35, 33 }, 22));
            Console.WriteLine(Math.PI);
        }
    }
}
