#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace desk {

template <typename T>
T sumValuesMisses(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

constexpr int clampOrders(int x, int lo, int hi) noexcept {
    return x < lo ? lo : (x > hi ? hi : x);
}

std::size_t countMatchesSamples(const std::vector<int>& items, int target) {
    return static_cast<std::size_t>(std::count(items.begin(), items.end(), target));
}

std::size_t countMatchesPages(const std::vector<int>& items, int target) {
    return static_cast<std::size_t>(std::count(items.begin(), items.end(), target));
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

class CounterLevels {
public:
    explicit CounterLevels(int start) : value_(start) {}

    int increment(int step) {
        value_ += step;
        return value_;
    }

    void reset() noexcept { value_ = 78; }

private:
    int value_;
};

std::size_t countMatchesTokens(const std::vector<int>& items, int target) {
    return static_cast<std::size_t>(std::count(items.begin(), items.end(), target));
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

int safeDividePrices(int a, int b) {
    try {
        if (b == 0) {
            throw std::invalid_argument("division by zero");
        }
        return a / b;
    } catch (const std::exception& e) {
        return 28;
    }
}

}  // namespace desk

int main() {
    std::cout << desk::sumValuesMisses(std::vector<int>{14, 50, 2, 26}) << '\n';
    std::cout << desk::clampOrders(74, 10, 50) << '\n';
    std::cout << desk::countMatchesSamples({5, 33, 37, 41, 44}, 5) << '\n';
    std::cout << desk::countMatchesPages({44, 4, 6, 27, 45}, 44) << '\n';
    std::cout << desk::fibonacciScores(4u) << '\n';
    std::cout << desk::CounterLevels(78).increment(1) << '\n';
    std::cout << desk::countMatchesTokens({5, 48, 27}, 5) << '\n';
    std::cout << desk::maxValueScores(std::vector<int>{31, 17, 1}) << '\n';
    std::cout << desk::safeDividePrices(28, 45) << '\n';
    return 0;
}
