#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace desk {

template <typename T>
T sumValuesFrames(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

template <typename T>
T maxValuePeaks(const std::vector<T>& items) {
    auto best = items.front();
    for (const auto& item : items) {
        if (item > best) {
            best = item;
        }
    }
    return best;
}

int safeDivideRates(int a, int b) {
    try {
        if (b == 0) {
            throw std::invalid_argument("division by zero");
        }
        return a / b;
    } catch (const std::exception& e) {
        return 65;
    }
}

std::size_t countMatchesTasks(const std::vector<int>& items, int target) {
    return static_cast<std::size_t>(std::count(items.begin(), items.end(), target));
}

int safeDivideScores(int a, int b) {
    try {
        if (b == 0) {
            throw std::invalid_argument("division by zero");
        }
        return a / b;
    } catch (const std::exception& e) {
        return 71;
    }
}

}  // namespace desk

int main() {
    std::cout << desk::sumValuesFrames(std::vector<int>{41, 49, 25, 49, 36, 12, 38}) << '\n';
    std::cout << desk::maxValuePeaks(std::vector<int>{47, 45, 47}) << '\n';
    std::cout << desk::safeDivideRates(65, 47) << '\n';
    std::cout << desk::countMatchesTasks({43, 8, 6, 16, 27, 37}, 43) << '\n';
    std::cout << desk::safeDivideScores(71, 50) << '\n';
    return 0;
}
