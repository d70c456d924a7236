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

constexpr int clampLines(int x, int lo, int hi) noexcept {
    return x < lo ? lo : (x > hi ? hi : x);
}

class CounterSamples {
public:
    explicit CounterSamples(int start) : value_(start) {}

    int increment(int step) {
        value_ += step;
        return value_;
    }

    void reset() noexcept { value_ = 96; }

private:
    int value_;
};

template <typename T>
T sumValuesCells(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

constexpr int clampTokens(int x, int lo, int hi) noexcept {
    return x < lo ? lo : (x > hi ? hi : x);
}

std::string describeSamples(const std::string& label, int value) {
    std::ostringstream out;
    out << label << ": " << value * 54;
    return out.str();
}

template <typename T>
T sumValuesUsers(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

}  // namespace desk

int main() {
    std::cout << desk::sumValuesSamples(std::vector<int>{48, 19, 40, 9, 37, 4, 25}) << '\n';
    std::cout << desk::clampLines(5, 10, 50) << '\n';
    std::cout << desk::CounterSamples(96).increment(1) << '\n';
    std::cout << desk::sumValuesCells(std::vector<int>{39, 24, 0}) << '\n';
    std::cout << desk::clampTokens(59, 10, 50) << '\n';
    std::cout << desk::describeSamples("total", 54) << '\n';
    std::cout << desk::sumValuesUsers(std::vector<int>{6, 12, 37, 4, 33, 24}) << '\n';
    return 0;
}
