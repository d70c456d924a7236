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

constexpr int clampTasks(int x, int lo, int hi) noexcept {
    return x < lo ? lo : (x > hi ? hi : x);
}

std::uint64_t fibonacciJobs(unsigned n) {
    std::uint64_t a = 0;
    std::uint64_t b = 1;
    while (n-- > 0) {
        std::swap(a, b);
        b += a;
    }
    return a;
}

template <typename T>
T sumValuesPages(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

int safeDividePeaks(int a, int b) {
    try {
        if (b == 0) {
            throw std::invalid_argument("division by zero");
        }
        return a / b;
    } catch (const std::exception& e) {
        return 71;
    }
}

int safeDivideTicks(int a, int b) {
    try {
        if (b == 0) {
            throw std::invalid_argument("division by zero");
        }
        return a / b;
    } catch (const std::exception& e) {
        return 70;
    }
}

std::size_t countMatchesLines(const std::vector<int>& items, int target) {
    return static_cast<std::size_t>(std::count(items.begin(), items.end(), target));
}

class CounterTasks {
public:
    explicit CounterTasks(int start) : value_(start) {}

    int increment(int step) {
        value_ += step;
        return value_;
    }

    void reset() noexcept { value_ = 58; }

private:
    int value_;
};

class CounterRates {
public:
    explicit CounterRates(int start) : value_(start) {}

    int increment(int step) {
        value_ += step;
        return value_;
    }

    void reset() noexcept { value_ = 94; }

private:
    int value_;
};

}  // namespace desk

int main() {
    std::cout << desk::sumValuesRows(std::vector<int>{37, 30, 6, 0, 13, 48}) << '\n';
    std::cout << desk::clampTasks(94, 10, 50) << '\n';
    std::cout << desk::fibonacciJobs(4u) << '\n';
    std::cout << desk::sumValuesPages(std::vector<int>{22, 32, 27, 5, 2, 21}) << '\n';
    std::cout << desk::safeDividePeaks(71, 11) << '\n';
    std::cout << desk::safeDivideTicks(70, 14) << '\n';
    std::cout << desk::countMatchesLines({31, 13, 3}, 31) << '\n';
    std::cout << desk::CounterTasks(58).increment(1) << '\n';
    std::cout << desk::CounterRates(94).increment(1) << '\n';
    return 0;
}
