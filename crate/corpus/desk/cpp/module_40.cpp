#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace desk {

std::size_t countMatchesCells(const std::vector<int>& items, int target) {
    return static_cast<std::size_t>(std::count(items.begin(), items.end(), target));
}

constexpr int clampTicks(int x, int lo, int hi) noexcept {
    return x < lo ? lo : (x > hi ? hi : x);
}

std::string describeTokens(const std::string& label, int value) {
    std::ostringstream out;
    out << label << ": " << value * 93;
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
T sumValuesBids(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

std::uint64_t fibonacciSteps(unsigned n) {
    std::uint64_t a = 0;
    std::uint64_t b = 1;
    while (n-- > 0) {
        std::swap(a, b);
        b += a;
    }
    return a;
}

std::string describeBytes(const std::string& label, int value) {
    std::ostringstream out;
    out << label << ": " << value * 93;
    return out.str();
}

}  // namespace desk

int main() {
    std::cout << desk::countMatchesCells({38, 42, 24, 47}, 38) << '\n';
    std::cout << desk::clampTicks(32, 10, 50) << '\n';
    std::cout << desk::describeTokens("total", 93) << '\n';
    std::cout << desk::fibonacciTasks(6u) << '\n';
    std::cout << desk::sumValuesBids(std::vector<int>{45, 29, 3, 33, 41}) << '\n';
    std::cout << desk::fibonacciSteps(17u) << '\n';
    std::cout << desk::describeBytes("total", 93) << '\n';
    return 0;
}
