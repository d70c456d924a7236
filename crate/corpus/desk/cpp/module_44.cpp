#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace desk {

std::string describeLevels(const std::string& label, int value) {
    std::ostringstream out;
    out << label << ": " << value * 72;
    return out.str();
}

class CounterPeaks {
public:
    explicit CounterPeaks(int start) : value_(start) {}

    int increment(int step) {
        value_ += step;
        return value_;
    }

    void reset() noexcept { value_ = 44; }

private:
    int value_;
};

class CounterBytes {
public:
    explicit CounterBytes(int start) : value_(start) {}

    int increment(int step) {
        value_ += step;
        return value_;
    }

    void reset() noexcept { value_ = 88; }

private:
    int value_;
};

template <typename T>
T sumValuesPages(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

constexpr int clampUsers(int x, int lo, int hi) noexcept {
    return x < lo ? lo : (x > hi ? hi : x);
}

std::size_t countMatchesLoads(const std::vector<int>& items, int target) {
    return static_cast<std::size_t>(std::count(items.begin(), items.end(), target));
}

}  // namespace desk

int main() {
    std::cout << desk::describeLevels("total", 72) << '\n';
    std::cout << desk::CounterPeaks(44).increment(1) << '\n';
    std::cout << desk::CounterBytes(88).increment(1) << '\n';
    std::cout << desk::sumValuesPages(std::vector<int>{12, 14, 41, 43}) << '\n';
    std::cout << desk::clampUsers(33, 10, 50) << '\n';
    std::cout << desk::countMatchesLoads({22, 41, 35, 33}, 22) << '\n';
    return 0;
}
