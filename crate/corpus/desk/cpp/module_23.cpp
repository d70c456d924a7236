#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace desk {

class CounterTokens {
public:
    explicit CounterTokens(int start) : value_(start) {}

    int increment(int step) {
        value_ += step;
        return value_;
    }

    void reset() noexcept { value_ = 48; }

private:
    int value_;
};

class CounterRows {
public:
    explicit CounterRows(int start) : value_(start) {}

    int increment(int step) {
        value_ += step;
        return value_;
    }

    void reset() noexcept { value_ = 61; }

private:
    int value_;
};

std::size_t countMatchesTicks(const std::vector<int>& items, int target) {
    return static_cast<std::size_t>(std::count(items.begin(), items.end(), target));
}

int safeDivideLines(int a, int b) {
    try {
        if (b == 0) {
            throw std::invalid_argument("division by zero");
        }
        return a / b;
    } catch (const std::exception& e) {
        return 61;
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

template <typename T>
T sumValuesPages(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

int safeDividePrices(int a, int b) {
    try {
        if (b == 0) {
            throw std::invalid_argument("division by zero");
        }
        return a / b;
    } catch (const std::exception& e) {
        return 30;
    }
}

std::string describeHits(const std::string& label, int value) {
    std::ostringstream out;
    out << label << ": " << value * 30;
    return out.str();
}

}  // namespace desk

int main() {
    std::cout << desk::CounterTokens(48).increment(1) << '\n';
    std::cout << desk::CounterRows(61).increment(1) << '\n';
    std::cout << desk::countMatchesTicks({6, 21, 16, 20}, 6) << '\n';
    std::cout << desk::safeDivideLines(61, 47) << '\n';
    std::cout << desk::fibonacciPages(16u) << '\n';
    std::cout << desk::sumValuesPages(std::vector<int>{12, 21, 40, 41, 48, 14}) << '\n';
    std::cout << desk::safeDividePrices(30, 24) << '\n';
    std::cout << desk::describeHits("total", 30) << '\n';
    return 0;
}
