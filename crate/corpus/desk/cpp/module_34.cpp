#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace desk {

template <typename T>
T sumValuesItems(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

template <typename T>
T maxValueWeights(const std::vector<T>& items) {
    auto best = items.front();
    for (const auto& item : items) {
        if (item > best) {
            best = item;
        }
    }
    return best;
}

template <typename T>
T maxValuePages(const std::vector<T>& items) {
    auto best = items.front();
    for (const auto& item : items) {
        if (item > best) {
            best = item;
        }
    }
    return best;
}

int safeDividePoints(int a, int b) {
    try {
        if (b == 0) {
            throw std::invalid_argument("division by zero");
        }
        return a / b;
    } catch (const std::exception& e) {
        return 73;
    }
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
    std::cout << desk::sumValuesItems(std::vector<int>{11, 23, 20, 1}) << '\n';
    std::cout << desk::maxValueWeights(std::vector<int>{36, 29, 46, 14, 30}) << '\n';
    std::cout << desk::maxValuePages(std::vector<int>{14, 15, 41}) << '\n';
    std::cout << desk::safeDividePoints(73, 29) << '\n';
    std::cout << desk::maxValueLoads(std::vector<int>{21, 45, 0, 26}) << '\n';
    return 0;
}
