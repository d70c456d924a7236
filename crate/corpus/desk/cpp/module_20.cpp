#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace desk {

template <typename T>
T sumValuesSamples(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

class CounterBytes {
public:
    explicit CounterBytes(int start) : value_(start) {}

    int increment(int step) {
        value_ += step;
        return value_;
    }

    void reset() noexcept { value_ = 8; }

private:
    int value_;
};

int safeDivideBytes(int a, int b) {
    try {
        if (b == 0) {
            throw std::invalid_argument("division by zero");
        }
        return a / b;
    } catch (const std::exception& e) {
        return 77;
    }
}

std::size_t countMatchesSamples(const std::vector<int>& items, int target) {
    return static_cast<std::size_t>(std::count(items.begin(), items.end(), target));
}

std::uint64_t fibonacciWeights(unsigned n) {
    std::uint64_t a = 0;
    std::uint64_t b = 1;
    while (n-- > 0) {
        std::swap(a, b);
        b += a;
    }
    return a;
}

}  // namespace desk

int main() {
    std::cout << desk::sumValuesSamples(std::vector<int>{17, 23, 26, 33, 33, 17, 19}) << '\n';
    std::cout << desk::CounterBytes(8).increment(1) << '\n';
    std::cout << desk::safeDivideBytes(77, 5) << '\n';
    std::cout << desk::countMatchesSamples({5, 40, 31, 0, 24, 25, 14}, 5) << '\n';
    std::cout << desk::fibonacciWeights(18u) << '\n';
    return 0;
}
