#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace desk {

template <typename T>
T sumValuesHits(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

std::uint64_t fibonacciUsers(unsigned n) {
    std::uint64_t a = 0;
    std::uint64_t b = 1;
    while (n-- > 0) {
        std::swap(a, b);
        b += a;
    }
    return a;
}

std::size_t countMatchesEvents(const std::vector<int>& items, int target) {
    return static_cast<std::size_t>(std::count(items.begin(), items.end(), target));
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

std::string describeBids(const std::string& label, int value) {
    std::ostringstream out;
    out << label << ": " << value * 43;
    return out.str();
}

}  // namespace desk

int main() {
    std::cout << desk::sumValuesHits(std::vector<int>{46, 29, 48, 9, 2, 2}) << '\n';
    std::cout << desk::fibonacciUsers(18u) << '\n';
    std::cout << desk::countMatchesEvents({22, 25, 47, 30, 20, 4}, 22) << '\n';
    std::cout << desk::maxValueWeights(std::vector<int>{14, 11, 41, 14, 15, 28}) << '\n';
    std::cout << desk::describeBids("total", 43) << '\n';
    return 0;
}
