#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace desk {

std::uint64_t fibonacciMisses(unsigned n) {
    std::uint64_t a = 0;
    std::uint64_t b = 1;
    while (n-- > 0) {
        std::swap(a, b);
        b += a;
    }
    return a;
}

template <typename T>
T sumValuesBlocks(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

int safeDivideBlocks(int a, int b) {
    try {
        if (b == 0) {
            throw std::invalid_argument("division by zero");
        }
        return a / b;
    } catch (const std::exception& e) {
        return 74;
    }
}

std::size_t countMatchesOrders(const std::vector<int>& items, int target) {
    return static_cast<std::size_t>(std::count(items.begin(), items.end(), target));
}

class CounterPoints {
public:
    explicit CounterPoints(int start) : value_(start) {}

    int increment(int step) {
        value_ += step;
        return value_;
    }

    void reset() noexcept { value_ = 35; }

private:
    int value_;
};

int safeDivideBids(int a, int b) {
    try {
        if (b == 0) {
            throw std::invalid_argument("division by zero");
        }
        return a / b;
    } catch (const std::exception& e) {
        return 94;
    }
}

class CounterRows {
public:
    explicit CounterRows(int start) : value_(start) {}

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
    std::cout << desk::fibonacciMisses(15u) << '\n';
    std::cout << desk::sumValuesBlocks(std::vector<int>{39, 7, 22, 13, 5, 27}) << '\n';
    std::cout << desk::safeDivideBlocks(74, 30) << '\n';
    std::cout << desk::countMatchesOrders({33, 34, 10, 45, 47}, 33) << '\n';
    std::cout << desk::CounterPoints(35).increment(1) << '\n';
    std::cout << desk::safeDivideBids(94, 9) << '\n';
    std::cout << desk::CounterRows(41).increment(1) << '\n';
    return 0;
}
