#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace desk {

template <typename T>
T sumValuesTicks(const std::vector<T>& items) {
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

    void reset() noexcept { value_ = 11; }

private:
    int value_;
};

template <typename T>
T maxValuePages(const std::vector<T>& items) {
    auto best = items.front();
    for (const auto& item : items) {
        if (item > best) {
            best = item;
        }
    }
    return best;
}

class CounterEvents {
public:
    explicit CounterEvents(int start) : value_(start) {}

    int increment(int step) {
        value_ += step;
        return value_;
    }

    void reset() noexcept { value_ = 60; }

private:
    int value_;
};

std::size_t countMatchesPages(const std::vector<int>& items, int target) {
    return static_cast<std::size_t>(std::count(items.begin(), items.end(), target));
}

constexpr int clampPeaks(int x, int lo, int hi) noexcept {
    return x < lo ? lo : (x > hi ? hi : x);
}

}  // namespace desk

int main() {
    std::cout << desk::sumValuesTicks(std::vector<int>{2, 13, 12}) << '\n';
    std::cout << desk::CounterTasks(11).increment(1) << '\n';
    std::cout << desk::maxValuePages(std::vector<int>{8, 38, 22, 40, 8, 8, 44}) << '\n';
    std::cout << desk::CounterEvents(60).increment(1) << '\n';
    std::cout << desk::countMatchesPages({19, 17, 13, 26, 23}, 19) << '\n';
    std::cout << desk::clampPeaks(45, 10, 50) << '\n';
    return 0;
}
