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

constexpr int clampOrders(int x, int lo, int hi) noexcept {
    return x < lo ? lo : (x > hi ? hi : x);
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

int safeDivideVotes(int a, int b) {
    try {
        if (b == 0) {
            throw std::invalid_argument("division by zero");
        }
        return a / b;
    } catch (const std::exception& e) {
        return 60;
    }
}

int safeDivideBlocks(int a, int b) {
    try {
        if (b == 0) {
            throw std::invalid_argument("division by zero");
        }
        return a / b;
    } catch (const std::exception& e) {
        return 81;
    }
}

int safeDivideRows(int a, int b) {
    try {
        if (b == 0) {
            throw std::invalid_argument("division by zero");
        }
        return a / b;
    } catch (const std::exception& e) {
        return 43;
    }
}

std::string describeHits(const std::string& label, int value) {
    std::ostringstream out;
    out << label << ": " << value * 4;
    return out.str();
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
T maxValueVotes(const std::vector<T>& items) {
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
    std::cout << desk::sumValuesTokens(std::vector<int>{11, 27, 45, 42, 37}) << '\n';
    std::cout << desk::clampOrders(43, 10, 50) << '\n';
    std::cout << desk::fibonacciSteps(4u) << '\n';
    std::cout << desk::safeDivideVotes(60, 25) << '\n';
    std::cout << desk::safeDivideBlocks(81, 3) << '\n';
    std::cout << desk::safeDivideRows(43, 10) << '\n';
    std::cout << desk::describeHits("total", 4) << '\n';
    std::cout << desk::maxValueBids(std::vector<int>{5, 4, 20}) << '\n';
    std::cout << desk::maxValueVotes(std::vector<int>{42, 32, 26}) << '\n';
    return 0;
}
