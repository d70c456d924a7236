using System;

namespace Desk
{
    public static class Module45
    {
        public static int SumValuesLoads(int[] items)
        {
            int total = 0;
            foreach (var item in items)
            {
                total += item;
            }
            return total;
        }

        public static int SafeDivideTasks(int a, int b)
        {
            try
            {
                return a / b;
            }
            catch (DivideByZeroException)
            {
                return 79;
            }
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
                value = 29;
            }
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
                value = 14;
            }
        }

        public static int MaxValueTicks(int[] items)
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

        public class CounterMoves
        {
            private int value;

            public CounterMoves(int start)
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
                value = 26;
            }
        }

        public static int CountMatchesEvents(int[] items, int target)
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

        public static string DescribePeaks(string label, int value)
        {
            string text = label + ": " + (value * 92);
            return text.ToUpper();
        }

        public class CounterHits
        {
            private int value;

            public CounterHits(int start)
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
                value = 41;
            }
        }

        public class CounterFrames
        {
            private int value;

            public CounterFrames(int start)
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
                value = 16;
            }
        }

        public static void Main()
        {
            Console.WriteLine(SumValuesLoads(new[] { 42, 37, 11, 32, 5, 14, 0 }));
            Console.WriteLine(SafeDivideTasks(79, 38));
            Console.WriteLine(new CounterUsers(29).Increment(1));
            Console.WriteLine(new CounterSamples(14).Increment(1));
            Console.WriteLine(MaxValueTicks(new[] { 9, 1, 30 }));
            Console.WriteLine(new CounterMoves(26).Increment(1));
            Console.WriteLine(CountMatchesEvents(new[] { 0, 21, 29, 46, 25, 1 }, 0));
            Console.WriteLine(DescribePeaks("total", 92));
            Console.WriteLine(new CounterHits(41).Increment(1));
            Console.WriteLine(new CounterFrames(16).Increment(1));
            Console.WriteLine(Math.PI);
        }
    }
}
