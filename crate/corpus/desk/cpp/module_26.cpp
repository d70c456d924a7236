#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace desk {

template <typename T>
T sumValuesTasks(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
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

int safeDivideCells(int a, int b) {
    try {
        if (b == 0) {
            throw std::invalid_argument("division by zero");
        }
        return a / b;
    } catch (const std::exception& e) {
        return 80;
    }
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

constexpr int clampLines(int x, int lo, int hi) noexcept {
    return x < lo ? lo : (x > hi ? hi : x);
}

}  // namespace desk

int main() {
    std::cout << desk::sumValuesTasks(std::vector<int>{46, 34, 20, 49, 34, 47}) << '\n';
    std::cout << desk::fibonacciMisses(16u) << '\n';
    std::cout << desk::safeDivideCells(80, 45) << '\n';
    std::cout << desk::fibonacciBlocks(19u) << '\n';
    std::cout << desk::clampLines(78, 10, 50) << '\n';
    return 0;
}
