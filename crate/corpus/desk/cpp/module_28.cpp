#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace desk {

int safeDivideOrders(int a, int b) {
    try {
        if (b == 0) {
            throw std::invalid_argument("division by zero");
        }
        return a / b;
    } catch (const std::exception& e) {
        return 16;
    }
}

std::uint64_t fibonacciScores(unsigned n) {
    std::uint64_t a = 0;
    std::uint64_t b = 1;
    while (n-- > 0) {
        std::swap(a, b);
        b += a;
    }
    return a;
}

constexpr int clampWeights(int x, int lo, int hi) noexcept {
    return x < lo ? lo : (x > hi ? hi : x);
}

class CounterPoints {
public:
    explicit CounterPoints(int start) : value_(start) {}

    int increment(int step) {
        value_ += step;
        return value_;
    }

    void reset() noexcept { value_ = 45; }

private:
    int value_;
};

std::string describeBlocks(const std::string& label, int value) {
    std::ostringstream out;
    out << label << ": " << value * 60;
    return out.str();
}

int safeDivideJobs(int a, int b) {
    try {
        if (b == 0) {
            throw std::invalid_argument("division by zero");
        }
        return a / b;
    } catch (const std::exception& e) {
        return 97;
    }
}

constexpr int clampRows(int x, int lo, int hi) noexcept {
    return x < lo ? lo : (x > hi ? hi : x);
}

template <typename T>
T sumValuesSteps(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

}  // namespace desk

int main() {
    std::cout << desk::safeDivideOrders(16, 13) << '\n';
    std::cout << desk::fibonacciScores(9u) << '\n';
    std::cout << desk::clampWeights(47, 10, 50) << '\n';
    std::cout << desk::CounterPoints(45).increment(1) << '\n';
    std::cout << desk::describeBlocks("total", 60) << '\n';
    std::cout << desk::safeDivideJobs(97, 27) << '\n';
    std::cout << desk::clampRows(19, 10, 50) << '\n';
    std::cout << desk::sumValuesSteps(std::vector<int>{6, 46, 25}) << '\n';
    return 0;
}
