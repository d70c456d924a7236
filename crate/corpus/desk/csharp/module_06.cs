using System;

namespace Desk
{
    public static class Module06
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

        public static int ClampLines(int x, int lo, int hi)
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
                value = 96;
            }
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

        public static int ClampTokens(int x, int lo, int hi)
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

        public static string DescribeSamples(string label, int value)
        {
            string text = label + ": " + (value * 54);
            return text.ToUpper();
        }

        public static int SumValuesUsers(int[] items)
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
            Console.WriteLine(SumValuesSamples(new[] { 48, 19, 40, 9, 37, 4, 25 }));
            Console.WriteLine(ClampLines(5, 10, 50));
            Console.WriteLine(new CounterSamples(96).Increment(1));
            Console.WriteLine(SumValuesCells(new[] { 39, 24, 0 }));
            Console.WriteLine(ClampTokens(59, 10, 50));
            Console.WriteLine(DescribeSamples("total", 54));
            Console.WriteLine(SumValuesUsers(new[] { 6, 12, 37, 4, 33, 24 }));
            Console.WriteLine(Math.PI);
        }
    }
}
