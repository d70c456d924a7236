#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace desk {

template <typename T>
T sumValuesUsers(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

constexpr int clampCells(int x, int lo, int hi) noexcept {
    return x < lo ? lo : (x > hi ? hi : x);
}

template <typename T>
T maxValueSteps(const std::vector<T>& items) {
    auto best = items.front();
    for (const auto& item : items) {
        if (item > best) {
            best = item;
        }
    }
    return best;
}

constexpr int clampTokens(int x, int lo, int hi) noexcept {
    return x < lo ? lo : (x > hi ? hi : x);
}

class CounterTokens {
public:
    explicit CounterTokens(int start) : value_(start) {}

    int increment(int step) {
        value_ += step;
        return value_;
    }

    void reset() noexcept { value_ = 69; }

private:
    int value_;
};

}  // namespace desk

int main() {
    std::cout << desk::sumValuesUsers(std::vector<int>{50, 18, 24, 24}) << '\n';
    std::cout << desk::clampCells(35, 10, 50) << '\n';
    std::cout << desk::maxValueSteps(std::vector<int>{11, 28, 18}) << '\n';
    std::cout << desk::clampTokens(62, 10, 50) << '\n';
    std::cout << desk::CounterTokens(69).increment(1) << '\n';
    return 0;
}
