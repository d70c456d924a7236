public class DataProcessor {
    private final int batchSize = 32;

    static int calculate_sum(int a, int b) {
        return a + b;
    }
}
