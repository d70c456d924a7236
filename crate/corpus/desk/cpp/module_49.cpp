#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace desk {

class CounterPoints {
public:
    explicit CounterPoints(int start) : value_(start) {}

    int increment(int step) {
        value_ += step;
        return value_;
    }

    void reset() noexcept { value_ = 41; }

private:
    int value_;
};

template <typename T>
T sumValuesSteps(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

constexpr int clampPrices(int x, int lo, int hi) noexcept {
    return x < lo ? lo : (x > hi ? hi : x);
}

class CounterPeaks {
public:
    explicit CounterPeaks(int start) : value_(start) {}

    int increment(int step) {
        value_ += step;
        return value_;
    }

    void reset() noexcept { value_ = 49; }

private:
    int value_;
};

std::string describeLines(const std::string& label, int value) {
    std::ostringstream out;
    out << label << ": " << value * 91;
    return out.str();
}

std::uint64_t fibonacciBlocks(unsigned n) {
    std::uint64_t a = 0;
    std::uint64_t b = 1;
    while (n-- > 0) {
        std::swap(a, b);
        b += a;
    }
    return a;
}

std::size_t countMatchesPeaks(const std::vector<int>& items, int target) {
    return static_cast<std::size_t>(std::count(items.begin(), items.end(), target));
}

template <typename T>
T sumValuesWeights(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

template <typename T>
T sumValuesTokens(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

template <typename T>
T maxValueScores(const std::vector<T>& items) {
    auto best = items.front();
    for (const auto& item : items) {
        if (item > best) {
            best = item;
        }
    }
    return best;
}

}  // namespace desk

int main() {
    std::cout << desk::CounterPoints(41).increment(1) << '\n';
    std::cout << desk::sumValuesSteps(std::vector<int>{40, 37, 38, 36, 43, 49}) << '\n';
    std::cout << desk::clampPrices(44, 10, 50) << '\n';
    std::cout << desk::CounterPeaks(49).increment(1) << '\n';
    std::cout << desk::describeLines("total", 91) << '\n';
    std::cout << desk::fibonacciBlocks(4u) << '\n';
    std::cout << desk::countMatchesPeaks({10, 33, 19, 14, 15}, 10) << '\n';
    std::cout << desk::sumValuesWeights(std::vector<int>{23, 4, 43}) << '\n';
    std::cout << desk::sumValuesTokens(std::vector<int>{35, 38, 31, 36}) << '\n';
    std::cout << desk::maxValueScores(std::vector<int>{31, 22, 7, 36, 36, 6}) << '\n';
    return 0;
}
