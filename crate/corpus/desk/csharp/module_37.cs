using System;

namespace Desk
{
    public static class Module37
    {
        public class CounterSteps
        {
            private int value;

            public CounterSteps(int start)
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
                value = 87;
            }
        }

        public class CounterTokens
        {
            private int value;

            public CounterTokens(int start)
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
                value = 2;
            }
        }

        public static int MaxValueRates(int[] items)
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

        public static int SumValuesLines(int[] items)
        {
            int total = 0;
            foreach (var item in items)
            {
                total += item;
            }
            return total;
        }

        public static int SumValuesWeights(int[] items)
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
            Console.WriteLine(new CounterSteps(87).Increment(1));
            Console.WriteLine(new CounterTokens(2).Increment(1));
            Console.WriteLine(MaxValueRates(new[] { 16, 19, 0 }));
            Console.WriteLine(SumValuesLines(new[] { 47, 40, 15, 10, 25, 23 }));
            Console.WriteLine(SumValuesWeights(new[] { 11, 14, 39, 26, 26 }));
            Console.WriteLine(Math.PI);
        }
    }
}
