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

std::string describeFrames(const std::string& label, int value) {
    std::ostringstream out;
    out << label << ": " << value * 37;
    return out.str();
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

int safeDivideMoves(int a, int b) {
    try {
        if (b == 0) {
            throw std::invalid_argument("division by zero");
        }
        return a / b;
    } catch (const std::exception& e) {
        return 76;
    }
}

template <typename T>
T maxValueHits(const std::vector<T>& items) {
    auto best = items.front();
    for (const auto& item : items) {
        if (item > best) {
            best = item;
        }
    }
    return best;
}

std::string describeLoads(const std::string& label, int value) {
    std::ostringstream out;
    out << label << ": " << value * 69;
    return out.str();
}

}  // namespace desk

int main() {
    std::cout << desk::sumValuesItems(std::vector<int>{48, 17, 30}) << '\n';
    std::cout << desk::describeFrames("total", 37) << '\n';
    std::cout << desk::maxValuePages(std::vector<int>{37, 10, 2, 20}) << '\n';
    std::cout << desk::safeDivideMoves(76, 44) << '\n';
    std::cout << desk::maxValueHits(std::vector<int>{38, 7, 5, 43, 6, 15}) << '\n';
    std::cout << desk::describeLoads("total", 69) << '\n';
    return 0;
}
