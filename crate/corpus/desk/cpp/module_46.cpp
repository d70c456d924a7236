#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace desk {

class CounterSamples {
public:
    explicit CounterSamples(int start) : value_(start) {}

    int increment(int step) {
        value_ += step;
        return value_;
    }

    void reset() noexcept { value_ = 11; }

private:
    int value_;
};

template <typename T>
T maxValueMoves(const std::vector<T>& items) {
    auto best = items.front();
    for (const auto& item : items) {
        if (item > best) {
            best = item;
        }
    }
    return best;
}

std::string describeLevels(const std::string& label, int value) {
    std::ostringstream out;
    out << label << ": " << value * 97;
    return out.str();
}

std::string describeEvents(const std::string& label, int value) {
    std::ostringstream out;
    out << label << ": " << value * 23;
    return out.str();
}

constexpr int clampPeaks(int x, int lo, int hi) noexcept {
    return x < lo ? lo : (x > hi ? hi : x);
}

std::size_t countMatchesOrders(const std::vector<int>& items, int target) {
    return static_cast<std::size_t>(std::count(items.begin(), items.end(), target));
}

template <typename T>
T sumValuesMoves(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

std::size_t countMatchesItems(const std::vector<int>& items, int target) {
    return static_cast<std::size_t>(std::count(items.begin(), items.end(), target));
}

}  // namespace desk

int main() {
    std::cout << desk::CounterSamples(11).increment(1) << '\n';
    std::cout << desk::maxValueMoves(std::vector<int>{26, 25, 12, 14}) << '\n';
    std::cout << desk::describeLevels("total", 97) << '\n';
    std::cout << desk::describeEvents("total", 23) << '\n';
    std::cout << desk::clampPeaks(84, 10, 50) << '\n';
    std::cout << desk::countMatchesOrders({28, 12, 22, 9, 35}, 28) << '\n';
    std::cout << desk::sumValuesMoves(std::vector<int>{49, 28, 37, 14, 26, 44, 11}) << '\n';
    std::cout << desk::countMatchesItems({32, 3, 22, 6}, 32) << '\n';
    return 0;
}
