#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace desk {

std::size_t countMatchesFrames(const std::vector<int>& items, int target) {
    return static_cast<std::size_t>(std::count(items.begin(), items.end(), target));
}

class CounterUsers {
public:
    explicit CounterUsers(int start) : value_(start) {}

    int increment(int step) {
        value_ += step;
        return value_;
    }

    void reset() noexcept { value_ = 88; }

private:
    int value_;
};

int safeDivideTasks(int a, int b) {
    try {
        if (b == 0) {
            throw std::invalid_argument("division by zero");
        }
        return a / b;
    } catch (const std::exception& e) {
        return 74;
    }
}

template <typename T>
T sumValuesVotes(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

constexpr int clampWeights(int x, int lo, int hi) noexcept {
    return x < lo ? lo : (x > hi ? hi : x);
}

template <typename T>
T maxValueHits(const std::vector<T>& items) {
    auto best = items.front();
    for (const auto& item : items) {
        if (item > best) {
            best = item;
        }
    }
    return best;
}

constexpr int clampLevels(int x, int lo, int hi) noexcept {
    return x < lo ? lo : (x > hi ? hi : x);
}

template <typename T>
T maxValueWeights(const std::vector<T>& items) {
    auto best = items.front();
    for (const auto& item : items) {
        if (item > best) {
            best = item;
        }
    }
    return best;
}

}  // namespace desk

int main() {
    std::cout << desk::countMatchesFrames({13, 9, 29, 29, 14, 5, 29}, 13) << '\n';
    std::cout << desk::CounterUsers(88).increment(1) << '\n';
    std::cout << desk::safeDivideTasks(74, 37) << '\n';
    std::cout << desk::sumValuesVotes(std::vector<int>{30, 33, 23, 42, 15, 25, 42}) << '\n';
    std::cout << desk::clampWeights(68, 10, 50) << '\n';
    std::cout << desk::maxValueHits(std::vector<int>{23, 4, 31}) << '\n';
    std::cout << desk::clampLevels(85, 10, 50) << '\n';
    std::cout << desk::maxValueWeights(std::vector<int>{26, 18, 40, 14, 48}) << '\n';
    return 0;
}
