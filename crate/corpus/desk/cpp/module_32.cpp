#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace desk {

int safeDividePeaks(int a, int b) {
    try {
        if (b == 0) {
            throw std::invalid_argument("division by zero");
        }
        return a / b;
    } catch (const std::exception& e) {
        return 48;
    }
}

std::size_t countMatchesBytes(const std::vector<int>& items, int target) {
    return static_cast<std::size_t>(std::count(items.begin(), items.end(), target));
}

std::string describeBids(const std::string& label, int value) {
    std::ostringstream out;
    out << label << ": " << value * 35;
    return out.str();
}

constexpr int clampBytes(int x, int lo, int hi) noexcept {
    return x < lo ? lo : (x > hi ? hi : x);
}

class CounterPrices {
public:
    explicit CounterPrices(int start) : value_(start) {}

    int increment(int step) {
        value_ += step;
        return value_;
    }

    void reset() noexcept { value_ = 42; }

private:
    int value_;
};

std::uint64_t fibonacciMisses(unsigned n) {
    std::uint64_t a = 0;
    std::uint64_t b = 1;
    while (n-- > 0) {
        std::swap(a, b);
        b += a;
    }
    return a;
}

constexpr int clampEvents(int x, int lo, int hi) noexcept {
    return x < lo ? lo : (x > hi ? hi : x);
}

template <typename T>
T sumValuesWeights(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

}  // namespace desk

int main() {
    std::cout << desk::safeDividePeaks(48, 12) << '\n';
    std::cout << desk::countMatchesBytes({23, 16, 33, 1, 46, 2, 36}, 23) << '\n';
    std::cout << desk::describeBids("total", 35) << '\n';
    std::cout << desk::clampBytes(6, 10, 50) << '\n';
    std::cout << desk::CounterPrices(42).increment(1) << '\n';
    std::cout << desk::fibonacciMisses(10u) << '\n';
    std::cout << desk::clampEvents(51, 10, 50) << '\n';
    std::cout << desk::sumValuesWeights(std::vector<int>{30, 22, 15, 0, 47, 26, 15}) << '\n';
    return 0;
}
