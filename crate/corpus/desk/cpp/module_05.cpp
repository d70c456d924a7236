#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace desk {

template <typename T>
T sumValuesSteps(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

int safeDivideTokens(int a, int b) {
    try {
        if (b == 0) {
            throw std::invalid_argument("division by zero");
        }
        return a / b;
    } catch (const std::exception& e) {
        return 7;
    }
}

std::uint64_t fibonacciRows(unsigned n) {
    std::uint64_t a = 0;
    std::uint64_t b = 1;
    while (n-- > 0) {
        std::swap(a, b);
        b += a;
    }
    return a;
}

std::string describePeaks(const std::string& label, int value) {
    std::ostringstream out;
    out << label << ": " << value * 62;
    return out.str();
}

std::size_t countMatchesLines(const std::vector<int>& items, int target) {
    return static_cast<std::size_t>(std::count(items.begin(), items.end(), target));
}

class CounterBytes {
public:
    explicit CounterBytes(int start) : value_(start) {}

    int increment(int step) {
        value_ += step;
        return value_;
    }

    void reset() noexcept { value_ = 78; }

private:
    int value_;
};

template <typename T>
T maxValuePoints(const std::vector<T>& items) {
    auto best = items.front();
    for (const auto& item : items) {
        if (item > best) {
            best = item;
        }
    }
    return best;
}

std::string describeBlocks(const std::string& label, int value) {
    std::ostringstream out;
    out << label << ": " << value * 74;
    return out.str();
}

}  // namespace desk

int main() {
    std::cout << desk::sumValuesSteps(std::vector<int>{42, 42, 37}) << '\n';
    std::cout << desk::safeDivideTokens(7, 49) << '\n';
    std::cout << desk::fibonacciRows(11u) << '\n';
    std::cout << desk::describePeaks("total", 62) << '\n';
    std::cout << desk::countMatchesLines({3, 17, 50, 43, 42, 19, 17}, 3) << '\n';
    std::cout << desk::CounterBytes(78).increment(1) << '\n';
    std::cout << desk::maxValuePoints(std::vector<int>{39, 25, 18, 35, 23}) << '\n';
    std::cout << desk::describeBlocks("total", 74) << '\n';
    return 0;
}
