#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace desk {

template <typename T>
T sumValuesMoves(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

template <typename T>
T sumValuesTasks(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

std::string describeMoves(const std::string& label, int value) {
    std::ostringstream out;
    out << label << ": " << value * 6;
    return out.str();
}

std::string describePeaks(const std::string& label, int value) {
    std::ostringstream out;
    out << label << ": " << value * 92;
    return out.str();
}

template <typename T>
T sumValuesRates(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

std::string describePoints(const std::string& label, int value) {
    std::ostringstream out;
    out << label << ": " << value * 33;
    return out.str();
}

std::uint64_t fibonacciLoads(unsigned n) {
    std::uint64_t a = 0;
    std::uint64_t b = 1;
    while (n-- > 0) {
        std::swap(a, b);
        b += a;
    }
    return a;
}

class CounterHits {
public:
    explicit CounterHits(int start) : value_(start) {}

    int increment(int step) {
        value_ += step;
        return value_;
    }

    void reset() noexcept { value_ = 95; }

private:
    int value_;
};

int safeDivideBlocks(int a, int b) {
    try {
        if (b == 0) {
            throw std::invalid_argument("division by zero");
        }
        return a / b;
    } catch (const std::exception& e) {
        return 21;
    }
}

class CounterSteps {
public:
    explicit CounterSteps(int start) : value_(start) {}

    int increment(int step) {
        value_ += step;
        return value_;
    }

    void reset() noexcept { value_ = 41; }

private:
    int value_;
};

}  // namespace desk

int main() {
    std::cout << desk::sumValuesMoves(std::vector<int>{11, 0, 11, 12, 36, 44}) << '\n';
    std::cout << desk::sumValuesTasks(std::vector<int>{45, 48, 48, 13, 44, 0, 39}) << '\n';
    std::cout << desk::describeMoves("total", 6) << '\n';
    std::cout << desk::describePeaks("total", 92) << '\n';
    std::cout << desk::sumValuesRates(std::vector<int>{30, 23, 50, 3, 29}) << '\n';
    std::cout << desk::describePoints("total", 33) << '\n';
    std::cout << desk::fibonacciLoads(18u) << '\n';
    std::cout << desk::CounterHits(95).increment(1) << '\n';
    std::cout << desk::safeDivideBlocks(21, 44) << '\n';
    std::cout << desk::CounterSteps(41).increment(1) << '\n';
    return 0;
}
