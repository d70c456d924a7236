using System;

namespace Desk
{
    public static class Module38
    {
        public static int SumValuesHits(int[] items)
        {
            int total = 0;
            foreach (var item in items)
            {
                total += item;
            }
            return total;
        }

        public static long FibonacciUsers(int n)
        {
            long a = 0;
            long b = 1;
            for (int i = 0; i < n; i++)
            {
                long next = a + b;
                a = b;
                b = next;
            }
            return a;
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

        public static string DescribeBids(string label, int value)
        {
            string text = label + ": " + (value * 43);
            return text.ToUpper();
        }

        public static void Main()
        {
            Console.WriteLine(SumValuesHits(new[] { 46, 29, 48, 9, 2, 2 }));
            Console.WriteLine(FibonacciUsers(18));
            Console.WriteLine(CountMatchesEvents(new[] { 22, 25, 47, 30, 20, 4 }, 22));
            Console.WriteLine(MaxValueWeights(new[] { 14, 11, 41, 14, 15, 28 }));
            Console.WriteLine(DescribeBids("total", 43));
            Console.WriteLine(Math.PI);
        }
    }
}
