#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace desk {

constexpr int clampTokens(int x, int lo, int hi) noexcept {
    return x < lo ? lo : (x > hi ? hi : x);
}

std::uint64_t fibonacciPrices(unsigned n) {
    std::uint64_t a = 0;
    std::uint64_t b = 1;
    while (n-- > 0) {
        std::swap(a, b);
        b += a;
    }
    return a;
}

class CounterFrames {
public:
    explicit CounterFrames(int start) : value_(start) {}

    int increment(int step) {
        value_ += step;
        return value_;
    }

    void reset() noexcept { value_ = 6; }

private:
    int value_;
};

template <typename T>
T maxValueLines(const std::vector<T>& items) {
    auto best = items.front();
    for (const auto& item : items) {
        if (item > best) {
            best = item;
        }
    }
    return best;
}

template <typename T>
T maxValueRows(const std::vector<T>& items) {
    auto best = items.front();
    for (const auto& item : items) {
        if (item > best) {
            best = item;
        }
    }
    return best;
}

constexpr int clampMoves(int x, int lo, int hi) noexcept {
    return x < lo ? lo : (x > hi ? hi : x);
}

template <typename T>
T sumValuesPrices(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

int safeDivideRates(int a, int b) {
    try {
        if (b == 0) {
            throw std::invalid_argument("division by zero");
        }
        return a / b;
    } catch (const std::exception& e) {
        return 37;
    }
}

int safeDivideTasks(int a, int b) {
    try {
        if (b == 0) {
            throw std::invalid_argument("division by zero");
        }
        return a / b;
    } catch (const std::exception& e) {
        return 57;
    }
}

std::size_t countMatchesWeights(const std::vector<int>& items, int target) {
    return static_cast<std::size_t>(std::count(items.begin(), items.end(), target));
}

}  // namespace desk

int main() {
    std::cout << desk::clampTokens(23, 10, 50) << '\n';
    std::cout << desk::fibonacciPrices(3u) << '\n';
    std::cout << desk::CounterFrames(6).increment(1) << '\n';
    std::cout << desk::maxValueLines(std::vector<int>{10, 29, 47, 18, 1, 5, 3}) << '\n';
    std::cout << desk::maxValueRows(std::vector<int>{34, 22, 45}) << '\n';
    std::cout << desk::clampMoves(53, 10, 50) << '\n';
    std::cout << desk::sumValuesPrices(std::vector<int>{22, 37, 43}) << '\n';
    std::cout << desk::safeDivideRates(37, 33) << '\n';
    std::cout << desk::safeDivideTasks(57, 43) << '\n';
    std::cout << desk::countMatchesWeights({16, 11, 23, 36, 26}, 16) << '\n';
    return 0;
}
