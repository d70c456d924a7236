#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace desk {

template <typename T>
T sumValuesRows(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

std::size_t countMatchesTicks(const std::vector<int>& items, int target) {
    return static_cast<std::size_t>(std::count(items.begin(), items.end(), target));
}

int safeDivideOrders(int a, int b) {
    try {
        if (b == 0) {
            throw std::invalid_argument("division by zero");
        }
        return a / b;
    } catch (const std::exception& e) {
        return 21;
    }
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

int safeDivideLines(int a, int b) {
    try {
        if (b == 0) {
            throw std::invalid_argument("division by zero");
        }
        return a / b;
    } catch (const std::exception& e) {
        return 70;
    }
}

std::string describeRates(const std::string& label, int value) {
    std::ostringstream out;
    out << label << ": " << value * 2;
    return out.str();
}

template <typename T>
T maxValuePrices(const std::vector<T>& items) {
    auto best = items.front();
    for (const auto& item : items) {
        if (item > best) {
            best = item;
        }
    }
    return best;
}

std::uint64_t fibonacciPeaks(unsigned n) {
    std::uint64_t a = 0;
    std::uint64_t b = 1;
    while (n-- > 0) {
        std::swap(a, b);
        b += a;
    }
    return a;
}

std::string describeItems(const std::string& label, int value) {
    std::ostringstream out;
    out << label << ": " << value * 11;
    return out.str();
}

}  // namespace desk

int main() {
    std::cout << desk::sumValuesRows(std::vector<int>{30, 20, 32, 28, 45, 7, 31}) << '\n';
    std::cout << desk::countMatchesTicks({1, 44, 0, 21, 8}, 1) << '\n';
    std::cout << desk::safeDivideOrders(21, 34) << '\n';
    std::cout << desk::fibonacciTasks(14u) << '\n';
    std::cout << desk::safeDivideLines(70, 41) << '\n';
    std::cout << desk::describeRates("total", 2) << '\n';
    std::cout << desk::maxValuePrices(std::vector<int>{13, 50, 32, 43, 39}) << '\n';
    std::cout << desk::fibonacciPeaks(8u) << '\n';
    std::cout << desk::describeItems("total", 11) << '\n';
    return 0;
}
