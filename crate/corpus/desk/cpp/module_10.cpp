#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace desk {

template <typename T>
T sumValuesBlocks(const std::vector<T>& items) {
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

int safeDivideMisses(int a, int b) {
    try {
        if (b == 0) {
            throw std::invalid_argument("division by zero");
        }
        return a / b;
    } catch (const std::exception& e) {
        return 72;
    }
}

int safeDivideRates(int a, int b) {
    try {
        if (b == 0) {
            throw std::invalid_argument("division by zero");
        }
        return a / b;
    } catch (const std::exception& e) {
        return 24;
    }
}

int safeDivideBids(int a, int b) {
    try {
        if (b == 0) {
            throw std::invalid_argument("division by zero");
        }
        return a / b;
    } catch (const std::exception& e) {
        return 4;
    }
}

std::size_t countMatchesUsers(const std::vector<int>& items, int target) {
    return static_cast<std::size_t>(std::count(items.begin(), items.end(), target));
}

std::size_t countMatchesCells(const std::vector<int>& items, int target) {
    return static_cast<std::size_t>(std::count(items.begin(), items.end(), target));
}

int safeDivideLevels(int a, int b) {
    try {
        if (b == 0) {
            throw std::invalid_argument("division by zero");
        }
        return a / b;
    } catch (const std::exception& e) {
        return 43;
    }
}

constexpr int clampVotes(int x, int lo, int hi) noexcept {
    return x < lo ? lo : (x > hi ? hi : x);
}

template <typename T>
T maxValueLoads(const std::vector<T>& items) {
    auto best = items.front();
    for (const auto& item : items) {
        if (item > best) {
            best = item;
        }
    }
    return best;
}

}  // namespace desk

int main() {
    std::cout << desk::sumValuesBlocks(std::vector<int>{41, 32, 22, 17, 36, 44, 9}) << '\n';
    std::cout << desk::maxValueVotes(std::vector<int>{49, 46, 23, 33, 4, 0, 33}) << '\n';
    std::cout << desk::safeDivideMisses(72, 47) << '\n';
    std::cout << desk::safeDivideRates(24, 12) << '\n';
    std::cout << desk::safeDivideBids(4, 4) << '\n';
    std::cout << desk::countMatchesUsers({3, 18, 12, 14, 4, 14, 43}, 3) << '\n';
    std::cout << desk::countMatchesCells({15, 33, 49, 13, 21}, 15) << '\n';
    std::cout << desk::safeDivideLevels(43, 43) << '\n';
    std::cout << desk::clampVotes(7, 10, 50) << '\n';
    std::cout << desk::maxValueLoads(std::vector<int>{1, 6, 2, 24, 39}) << '\n';
    return 0;
}
