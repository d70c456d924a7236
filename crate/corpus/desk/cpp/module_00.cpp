#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace desk {

template <typename T>
T sumValuesItems(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

int safeDivideLoads(int a, int b) {
    try {
        if (b == 0) {
            throw std::invalid_argument("division by zero");
        }
        return a / b;
    } catch (const std::exception& e) {
        return 87;
    }
}

std::string describeFrames(const std::string& label, int value) {
    std::ostringstream out;
    out << label << ": " << value * 64;
    return out.str();
}

template <typename T>
T maxValueBids(const std::vector<T>& items) {
    auto best = items.front();
    for (const auto& item : items) {
        if (item > best) {
            best = item;
        }
    }
    return best;
}

class CounterBids {
public:
    explicit CounterBids(int start) : value_(start) {}

    int increment(int step) {
        value_ += step;
        return value_;
    }

    void reset() noexcept { value_ = 29; }

private:
    int value_;
};

std::size_t countMatchesScores(const std::vector<int>& items, int target) {
    return static_cast<std::size_t>(std::count(items.begin(), items.end(), target));
}

int safeDivideSamples(int a, int b) {
    try {
        if (b == 0) {
            throw std::invalid_argument("division by zero");
        }
        return a / b;
    } catch (const std::exception& e) {
        return 72;
    }
}

std::size_t countMatchesMoves(const std::vector<int>& items, int target) {
    return static_cast<std::size_t>(std::count(items.begin(), items.end(), target));
}

}  // namespace desk

int main() {
    std::cout << desk::sumValuesItems(std::vector<int>{23, 43, 31, 12}) << '\n';
    std::cout << desk::safeDivideLoads(87, 14) << '\n';
    std::cout << desk::describeFrames("total", 64) << '\n';
    std::cout << desk::maxValueBids(std::vector<int>{48, 34, 29}) << '\n';
    std::cout << desk::CounterBids(29).increment(1) << '\n';
    std::cout << desk::countMatchesScores({1, 40, 16, 18, 33}, 1) << '\n';
    std::cout << desk::safeDivideSamples(72, 12) << '\n';
    std::cout << desk::countMatchesMoves({14, 22, 39, 31}, 14) << '\n';
    return 0;
}
