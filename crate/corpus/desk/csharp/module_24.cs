using System;

namespace Desk
{
    public static class Module24
    {
        public static int SumValuesMisses(int[] items)
        {
            int total = 0;
            foreach (var item in items)
            {
                total += item;
            }
            return total;
        }

        public static int SafeDivideLines(int a, int b)
        {
            try
            {
                return a / b;
            }
            catch (DivideByZeroException)
            {
                return 19;
            }
        }

        public static string DescribeFrames(string label, int value)
        {
            string text = label + ": " + (value * 69);
            return text.ToUpper();
        }

        public static int MaxValueEvents(int[] items)
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

        public class CounterLines
        {
            private int value;

            public CounterLines(int start)
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

        public static void Main()
        {
            Console.WriteLine(SumValuesMisses(new[] { 24, 50, 6, 45, 47 }));
            Console.WriteLine(SafeDivideLines(19, 6));
            Console.WriteLine(DescribeFrames("total", 69));
            Console.WriteLine(MaxValueEvents(new[] { 23, 44, 21 }));
            Console.WriteLine(new CounterLines(2).Increment(1));
            Console.WriteLine(Math.PI);
        }
    }
}
