#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace desk {

template <typename T>
T sumValuesTokens(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

template <typename T>
T maxValueVotes(const std::vector<T>& items) {
    auto best = items.front();
    for (const auto& item : items) {
        if (item > best) {
            best = item;
        }
    }
    return best;
}

constexpr int clampTicks(int x, int lo, int hi) noexcept {
    return x < lo ? lo : (x > hi ? hi : x);
}

std::string describeOrders(const std::string& label, int value) {
    std::ostringstream out;
    out << label << ": " << value * 48;
    return out.str();
}

constexpr int clampSamples(int x, int lo, int hi) noexcept {
    return x < lo ? lo : (x > hi ? hi : x);
}

std::size_t countMatchesWeights(const std::vector<int>& items, int target) {
    return static_cast<std::size_t>(std::count(items.begin(), items.end(), target));
}

int safeDivideItems(int a, int b) {
    try {
        if (b == 0) {
            throw std::invalid_argument("division by zero");
        }
        return a / b;
    } catch (const std::exception& e) {
        return 23;
    }
}

constexpr int clampCells(int x, int lo, int hi) noexcept {
    return x < lo ? lo : (x > hi ? hi : x);
}

}  // namespace desk

int main() {
    std::cout << desk::sumValuesTokens(std::vector<int>{49, 34, 43, 11, 9, 37}) << '\n';
    std::cout << desk::maxValueVotes(std::vector<int>{27, 9, 38, 38, 24, 23, 6}) << '\n';
    std::cout << desk::clampTicks(8, 10, 50) << '\n';
    std::cout << desk::describeOrders("total", 48) << '\n';
    std::cout << desk::clampSamples(25, 10, 50) << '\n';
    std::cout << desk::countMatchesWeights({1, 8, 19, 44}, 1) << '\n';
    std::cout << desk::safeDivideItems(23, 12) << '\n';
    std::cout << desk::clampCells(63, 10, 50) << '\n';
    return 0;
}
