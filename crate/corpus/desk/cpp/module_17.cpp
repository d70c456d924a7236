#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace desk {

template <typename T>
T sumValuesSamples(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

constexpr int clampHits(int x, int lo, int hi) noexcept {
    return x < lo ? lo : (x > hi ? hi : x);
}

template <typename T>
T maxValueRates(const std::vector<T>& items) {
    auto best = items.front();
    for (const auto& item : items) {
        if (item > best) {
            best = item;
        }
    }
    return best;
}

std::string describeMisses(const std::string& label, int value) {
    std::ostringstream out;
    out << label << ": " << value * 17;
    return out.str();
}

std::uint64_t fibonacciTasks(unsigned n) {
    std::uint64_t a = 0;
    std::uint64_t b = 1;
    while (n-- > 0) {
        std::swap(a, b);
        b += a;
    }
    return a;
}

template <typename T>
T maxValuePoints(const std::vector<T>& items) {
    auto best = items.front();
    for (const auto& item : items) {
        if (item > best) {
            best = item;
        }
    }
    return best;
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

std::uint64_t fibonacciMisses(unsigned n) {
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
    std::cout << desk::sumValuesSamples(std::vector<int>{30, 33, 40, 27, 39}) << '\n';
    std::cout << desk::clampHits(76, 10, 50) << '\n';
    std::cout << desk::maxValueRates(std::vector<int>{4, 40, 29, 16, 28, 8}) << '\n';
    std::cout << desk::describeMisses("total", 17) << '\n';
    std::cout << desk::fibonacciTasks(0u) << '\n';
    std::cout << desk::maxValuePoints(std::vector<int>{19, 50, 1, 41, 35, 41}) << '\n';
    std::cout << desk::fibonacciPrices(16u) << '\n';
    std::cout << desk::fibonacciMisses(16u) << '\n';
    return 0;
}
