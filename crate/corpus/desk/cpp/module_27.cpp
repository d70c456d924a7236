#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace desk {

template <typename T>
T maxValuePeaks(const std::vector<T>& items) {
    auto best = items.front();
    for (const auto& item : items) {
        if (item > best) {
            best = item;
        }
    }
    return best;
}

template <typename T>
T maxValuePrices(const std::vector<T>& items) {
    auto best = items.front();
    for (const auto& item : items) {
        if (item > best) {
            best = item;
        }
    }
    return best;
}

class CounterPeaks {
public:
    explicit CounterPeaks(int start) : value_(start) {}

    int increment(int step) {
        value_ += step;
        return value_;
    }

    void reset() noexcept { value_ = 63; }

private:
    int value_;
};

constexpr int clampUsers(int x, int lo, int hi) noexcept {
    return x < lo ? lo : (x > hi ? hi : x);
}

template <typename T>
T sumValuesPages(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

}  // namespace desk

int main() {
    std::cout << desk::maxValuePeaks(std::vector<int>{40, 33, 49, 2, 32, 32}) << '\n';
    std::cout << desk::maxValuePrices(std::vector<int>{37, 50, 42, 16, 23, 47, 17}) << '\n';
    std::cout << desk::CounterPeaks(63).increment(1) << '\n';
    std::cout << desk::clampUsers(14, 10, 50) << '\n';
    std::cout << desk::sumValuesPages(std::vector<int>{25, 31, 12, 26, 29}) << '\n';
    return 0;
}
