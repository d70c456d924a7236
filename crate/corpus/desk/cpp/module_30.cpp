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

std::size_t countMatchesWeights(const std::vector<int>& items, int target) {
    return static_cast<std::size_t>(std::count(items.begin(), items.end(), target));
}

constexpr int clampCells(int x, int lo, int hi) noexcept {
    return x < lo ? lo : (x > hi ? hi : x);
}

class CounterPeaks {
public:
    explicit CounterPeaks(int start) : value_(start) {}

    int increment(int step) {
        value_ += step;
        return value_;
    }

    void reset() noexcept { value_ = 33; }

private:
    int value_;
};

int safeDivideVotes(int a, int b) {
    try {
        if (b == 0) {
            throw std::invalid_argument("division by zero");
        }
        return a / b;
    } catch (const std::exception& e) {
        return 42;
    }
}

}  // namespace desk

int main() {
    std::cout << desk::sumValuesSamples(std::vector<int>{42, 9, 12, 0, 37, 9}) << '\n';
    std::cout << desk::countMatchesWeights({48, 49, 23, 27, 44}, 48) << '\n';
    std::cout << desk::clampCells(57, 10, 50) << '\n';
    std::cout << desk::CounterPeaks(33).increment(1) << '\n';
    std::cout << desk::safeDivideVotes(42, 28) << '\n';
    return 0;
}
