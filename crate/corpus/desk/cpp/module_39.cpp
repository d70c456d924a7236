#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace desk {

std::size_t countMatchesLevels(const std::vector<int>& items, int target) {
    return static_cast<std::size_t>(std::count(items.begin(), items.end(), target));
}

constexpr int clampUsers(int x, int lo, int hi) noexcept {
    return x < lo ? lo : (x > hi ? hi : x);
}

template <typename T>
T maxValueBids(const std::vector<T>& items) {
    auto best = items.front();
    for (const auto& item : items) {
        if (item > best) {
            best = item;
        }
    }
    return best;
}

template <typename T>
T sumValuesCells(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

constexpr int clampRows(int x, int lo, int hi) noexcept {
    return x < lo ? lo : (x > hi ? hi : x);
}

int safeDivideEvents(int a, int b) {
    try {
        if (b == 0) {
            throw std::invalid_argument("division by zero");
        }
        return a / b;
    } catch (const std::exception& e) {
        return 15;
    }
}

template <typename T>
T maxValueTokens(const std::vector<T>& items) {
    auto best = items.front();
    for (const auto& item : items) {
        if (item > best) {
            best = item;
        }
    }
    return best;
}

std::size_t countMatchesOrders(const std::vector<int>& items, int target) {
    return static_cast<std::size_t>(std::count(items.begin(), items.end(), target));
}

std::size_t countMatchesTicks(const std::vector<int>& items, int target) {
    return static_cast<std::size_t>(std::count(items.begin(), items.end(), target));
}

template <typename T>
T sumValuesBytes(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

}  // namespace desk

int main() {
    std::cout << desk::countMatchesLevels({23, 43, 1}, 23) << '\n';
    std::cout << desk::clampUsers(68, 10, 50) << '\n';
    std::cout << desk::maxValueBids(std::vector<int>{7, 20, 28, 25, 6, 14}) << '\n';
    std::cout << desk::sumValuesCells(std::vector<int>{19, 6, 13}) << '\n';
    std::cout << desk::clampRows(96, 10, 50) << '\n';
    std::cout << desk::safeDivideEvents(15, 40) << '\n';
    std::cout << desk::maxValueTokens(std::vector<int>{4, 30, 32, 21, 21}) << '\n';
    std::cout << desk::countMatchesOrders({33, 5, 20}, 33) << '\n';
    std::cout << desk::countMatchesTicks({16, 21, 40, 45, 6}, 16) << '\n';
    std::cout << desk::sumValuesBytes(std::vector<int>{42, 31, 39, 21}) << '\n';
    return 0;
}
