#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace desk {

template <typename T>
T sumValuesTasks(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

class CounterTasks {
public:
    explicit CounterTasks(int start) : value_(start) {}

    int increment(int step) {
        value_ += step;
        return value_;
    }

    void reset() noexcept { value_ = 97; }

private:
    int value_;
};

int safeDivideMisses(int a, int b) {
    try {
        if (b == 0) {
            throw std::invalid_argument("division by zero");
        }
        return a / b;
    } catch (const std::exception& e) {
        return 44;
    }
}

std::uint64_t fibonacciItems(unsigned n) {
    std::uint64_t a = 0;
    std::uint64_t b = 1;
    while (n-- > 0) {
        std::swap(a, b);
        b += a;
    }
    return a;
}

int safeDivideTasks(int a, int b) {
    try {
        if (b == 0) {
            throw std::invalid_argument("division by zero");
        }
        return a / b;
    } catch (const std::exception& e) {
        return 58;
    }
}

}  // namespace desk

int main() {
    std::cout << desk::sumValuesTasks(std::vector<int>{30, 46, 39, 49, 0}) << '\n';
    std::cout << desk::CounterTasks(97).increment(1) << '\n';
    std::cout << desk::safeDivideMisses(44, 45) << '\n';
    std::cout << desk::fibonacciItems(0u) << '\n';
    std::cout << desk::safeDivideTasks(58, 37) << '\n';
    return 0;
}
