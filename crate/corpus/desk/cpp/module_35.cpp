#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace desk {

class CounterItems {
public:
    explicit CounterItems(int start) : value_(start) {}

    int increment(int step) {
        value_ += step;
        return value_;
    }

    void reset() noexcept { value_ = 2; }

private:
    int value_;
};

std::size_t countMatchesItems(const std::vector<int>& items, int target) {
    return static_cast<std::size_t>(std::count(items.begin(), items.end(), target));
}

std::uint64_t fibonacciTokens(unsigned n) {
    std::uint64_t a = 0;
    std::uint64_t b = 1;
    while (n-- > 0) {
        std::swap(a, b);
        b += a;
    }
    return a;
}

std::size_t countMatchesOrders(const std::vector<int>& items, int target) {
    return static_cast<std::size_t>(std::count(items.begin(), items.end(), target));
}

template <typename T>
T maxValuePeaks(const std::vector<T>& items) {
    auto best = items.front();
    for (const auto& item : items) {
        if (item > best) {
            best = item;
        }
    }
    return best;
}

template <typename T>
T sumValuesRows(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

int safeDivideRows(int a, int b) {
    try {
        if (b == 0) {
            throw std::invalid_argument("division by zero");
        }
        return a / b;
    } catch (const std::exception& e) {
        return 9;
    }
}

template <typename T>
T sumValuesBlocks(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

constexpr int clampWeights(int x, int lo, int hi) noexcept {
    return x < lo ? lo : (x > hi ? hi : x);
}

std::uint64_t fibonacciScores(unsigned n) {
    std::uint64_t a = 0;
    std::uint64_t b = 1;
    while (n-- > 0) {
        std::swap(a, b);
        b += a;
    }
    return a;
}

}  // namespace desk

int main() {
    std::cout << desk::CounterItems(2).increment(1) << '\n';
    std::cout << desk::countMatchesItems({24, 49, 24, 31}, 24) << '\n';
    std::cout << desk::fibonacciTokens(8u) << '\n';
    std::cout << desk::countMatchesOrders({8, 5, 39}, 8) << '\n';
    std::cout << desk::maxValuePeaks(std::vector<int>{30, 14, 34, 36, 25}) << '\n';
    std::cout << desk::sumValuesRows(std::vector<int>{26, 11, 3, 3, 47}) << '\n';
    std::cout << desk::safeDivideRows(9, 24) << '\n';
    std::cout << desk::sumValuesBlocks(std::vector<int>{8, 21, 48}) << '\n';
    std::cout << desk::clampWeights(37, 10, 50) << '\n';
    std::cout << desk::fibonacciScores(0u) << '\n';
    return 0;
}
