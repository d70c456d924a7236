using System;

namespace Desk
{
    public static class Module01
    {
        public static int SumValuesFrames(int[] items)
        {
            int total = 0;
            foreach (var item in items)
            {
                total += item;
            }
            return total;
        }

        public static int MaxValuePeaks(int[] items)
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

        public static int SafeDivideRates(int a, int b)
        {
            try
            {
                return a / b;
            }
            catch (DivideByZeroException)
            {
                return 65;
            }
        }

        public static int CountMatchesTasks(int[] items, int target)
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

        public static int SafeDivideScores(int a, int b)
        {
            try
            {
                return a / b;
            }
            catch (DivideByZeroException)
            {
                return 71;
            }
        }

        public static void Main()
        {
            Console.WriteLine(SumValuesFrames(new[] { 41, 49, 25, 49, 36, 12, 38 }));
            Console.WriteLine(MaxValuePeaks(new[] { 47, 45, 47 }));
            Console.WriteLine(SafeDivideRates(65, 47));
            Console.WriteLine(CountMatchesTasks(new[] { 43, 8, 6, 16, 27, 37 }, 43));
            Console.WriteLine(SafeDivideScores(71, 50));
            Console.WriteLine(Math.PI);
        }
    }
}
