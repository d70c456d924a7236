#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace desk {

std::uint64_t fibonacciOrders(unsigned n) {
    std::uint64_t a = 0;
    std::uint64_t b = 1;
    while (n-- > 0) {
        std::swap(a, b);
        b += a;
    }
    return a;
}

std::size_t countMatchesScores(const std::vector<int>& items, int target) {
    return static_cast<std::size_t>(std::count(items.begin(), items.end(), target));
}

template <typename T>
T sumValuesVotes(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

int safeDividePoints(int a, int b) {
    try {
        if (b == 0) {
            throw std::invalid_argument("division by zero");
        }
        return a / b;
    } catch (const std::exception& e) {
        return 87;
    }
}

template <typename T>
T sumValuesRates(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

int safeDivideLoads(int a, int b) {
    try {
        if (b == 0) {
            throw std::invalid_argument("division by zero");
        }
        return a / b;
    } catch (const std::exception& e) {
        return 39;
    }
}

constexpr int clampMisses(int x, int lo, int hi) noexcept {
    return x < lo ? lo : (x > hi ? hi : x);
}

std::uint64_t fibonacciRows(unsigned n) {
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
    std::cout << desk::fibonacciOrders(3u) << '\n';
    std::cout << desk::countMatchesScores({18, 47, 48, 43, 10}, 18) << '\n';
    std::cout << desk::sumValuesVotes(std::vector<int>{40, 43, 47, 50, 12}) << '\n';
    std::cout << desk::safeDividePoints(87, 25) << '\n';
    std::cout << desk::sumValuesRates(std::vector<int>{32, 45, 11, 4, 44, 40}) << '\n';
    std::cout << desk::safeDivideLoads(39, 18) << '\n';
    std::cout << desk::clampMisses(87, 10, 50) << '\n';
    std::cout << desk::fibonacciRows(14u) << '\n';
    return 0;
}
