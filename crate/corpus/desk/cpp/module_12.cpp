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

std::size_t countMatchesVotes(const std::vector<int>& items, int target) {
    return static_cast<std::size_t>(std::count(items.begin(), items.end(), target));
}

int safeDivideVotes(int a, int b) {
    try {
        if (b == 0) {
            throw std::invalid_argument("division by zero");
        }
        return a / b;
    } catch (const std::exception& e) {
        return 63;
    }
}

constexpr int clampRates(int x, int lo, int hi) noexcept {
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

std::string describeTokens(const std::string& label, int value) {
    std::ostringstream out;
    out << label << ": " << value * 66;
    return out.str();
}

std::uint64_t fibonacciRates(unsigned n) {
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
    std::cout << desk::countMatchesEvents({37, 12, 41, 9, 28, 26, 0}, 37) << '\n';
    std::cout << desk::countMatchesVotes({30, 39, 14}, 30) << '\n';
    std::cout << desk::safeDivideVotes(63, 10) << '\n';
    std::cout << desk::clampRates(18, 10, 50) << '\n';
    std::cout << desk::sumValuesWeights(std::vector<int>{45, 4, 32, 3, 14}) << '\n';
    std::cout << desk::describeTokens("total", 66) << '\n';
    std::cout << desk::fibonacciRates(9u) << '\n';
    return 0;
}
