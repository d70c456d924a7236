#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace desk {

std::uint64_t fibonacciVotes(unsigned n) {
    std::uint64_t a = 0;
    std::uint64_t b = 1;
    while (n-- > 0) {
        std::swap(a, b);
        b += a;
    }
    return a;
}

std::size_t countMatchesLevels(const std::vector<int>& items, int target) {
    return static_cast<std::size_t>(std::count(items.begin(), items.end(), target));
}

constexpr int clampSamples(int x, int lo, int hi) noexcept {
    return x < lo ? lo : (x > hi ? hi : x);
}

template <typename T>
T sumValuesPoints(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

template <typename T>
T maxValueOrders(const std::vector<T>& items) {
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

constexpr int clampPages(int x, int lo, int hi) noexcept {
    return x < lo ? lo : (x > hi ? hi : x);
}

}  // namespace desk

int main() {
    std::cout << desk::fibonacciVotes(12u) << '\n';
    std::cout << desk::countMatchesLevels({28, 48, 13, 18}, 28) << '\n';
    std::cout << desk::clampSamples(3, 10, 50) << '\n';
    std::cout << desk::sumValuesPoints(std::vector<int>{31, 15, 16, 42}) << '\n';
    std::cout << desk::maxValueOrders(std::vector<int>{18, 6, 46, 47, 49, 17, 7}) << '\n';
    std::cout << desk::fibonacciPrices(6u) << '\n';
    std::cout << desk::clampPages(72, 10, 50) << '\n';
    return 0;
}
