#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace desk {

class CounterSteps {
public:
    explicit CounterSteps(int start) : value_(start) {}

    int increment(int step) {
        value_ += step;
        return value_;
    }

    void reset() noexcept { value_ = 87; }

private:
    int value_;
};

class CounterTokens {
public:
    explicit CounterTokens(int start) : value_(start) {}

    int increment(int step) {
        value_ += step;
        return value_;
    }

    void reset() noexcept { value_ = 2; }

private:
    int value_;
};

template <typename T>
T maxValueRates(const std::vector<T>& items) {
    auto best = items.front();
    for (const auto& item : items) {
        if (item > best) {
            best = item;
        }
    }
    return best;
}

template <typename T>
T sumValuesLines(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

template <typename T>
T sumValuesWeights(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

}  // namespace desk

int main() {
    std::cout << desk::CounterSteps(87).increment(1) << '\n';
    std::cout << desk::CounterTokens(2).increment(1) << '\n';
    std::cout << desk::maxValueRates(std::vector<int>{16, 19, 0}) << '\n';
    std::cout << desk::sumValuesLines(std::vector<int>{47, 40, 15, 10, 25, 23}) << '\n';
    std::cout << desk::sumValuesWeights(std::vector<int>{11, 14, 39, 26, 26}) << '\n';
    return 0;
}
