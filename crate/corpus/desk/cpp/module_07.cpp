#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace desk {

std::size_t countMatchesEvents(const std::vector<int>& items, int target) {
    return static_cast<std::size_t>(std::count(items.begin(), items.end(), target));
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

std::size_t countMatchesLoads(const std::vector<int>& items, int target) {
    return static_cast<std::size_t>(std::count(items.begin(), items.end(), target));
}

constexpr int clampBytes(int x, int lo, int hi) noexcept {
    return x < lo ? lo : (x > hi ? hi : x);
}

template <typename T>
T sumValuesMoves(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

}  // namespace desk

int main() {
    std::cout << desk::countMatchesEvents({3, 28, 37, 18, 46, 39, 2}, 3) << '\n';
    std::cout << desk::fibonacciPrices(17u) << '\n';
    std::cout << desk::countMatchesLoads({17, 44, 41}, 17) << '\n';
    std::cout << desk::clampBytes(39, 10, 50) << '\n';
    std::cout << desk::sumValuesMoves(std::vector<int>{0, 3, 37, 28}) << '\n';
    return 0;
}
