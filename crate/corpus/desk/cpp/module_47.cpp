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

int safeDividePoints(int a, int b) {
    try {
        if (b == 0) {
            throw std::invalid_argument("division by zero");
        }
        return a / b;
    } catch (const std::exception& e) {
        return 71;
    }
}

std::uint64_t fibonacciPages(unsigned n) {
    std::uint64_t a = 0;
    std::uint64_t b = 1;
    while (n-- > 0) {
        std::swap(a, b);
        b += a;
    }
    return a;
}

class CounterPages {
public:
    explicit CounterPages(int start) : value_(start) {}

    int increment(int step) {
        value_ += step;
        return value_;
    }

    void reset() noexcept { value_ = 71; }

private:
    int value_;
};

int safeDivideTicks(int a, int b) {
    try {
        if (b == 0) {
            throw std::invalid_argument("division by zero");
        }
        return a / b;
    } catch (const std::exception& e) {
        return 11;
    }
}

}  // namespace desk

int main() {
    std::cout << desk::sumValuesHits(std::vector<int>{34, 15, 9, 7, 4}) << '\n';
    std::cout << desk::safeDividePoints(71, 43) << '\n';
    std::cout << desk::fibonacciPages(19u) << '\n';
    std::cout << desk::CounterPages(71).increment(1) << '\n';
    std::cout << desk::safeDivideTicks(11, 19) << '\n';
    return 0;
}
