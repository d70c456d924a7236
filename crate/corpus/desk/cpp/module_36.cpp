#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace desk {

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

template <typename T>
T maxValueTokens(const std::vector<T>& items) {
    auto best = items.front();
    for (const auto& item : items) {
        if (item > best) {
            best = item;
        }
    }
    return best;
}

template <typename T>
T sumValuesTicks(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

template <typename T>
T maxValueRows(const std::vector<T>& items) {
    auto best = items.front();
    for (const auto& item : items) {
        if (item > best) {
            best = item;
        }
    }
    return best;
}

std::string describeWeights(const std::string& label, int value) {
    std::ostringstream out;
    out << label << ": " << value * 4;
    return out.str();
}

class CounterJobs {
public:
    explicit CounterJobs(int start) : value_(start) {}

    int increment(int step) {
        value_ += step;
        return value_;
    }

    void reset() noexcept { value_ = 78; }

private:
    int value_;
};

std::size_t countMatchesLevels(const std::vector<int>& items, int target) {
    return static_cast<std::size_t>(std::count(items.begin(), items.end(), target));
}

template <typename T>
T sumValuesLevels(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

}  // namespace desk

int main() {
    std::cout << desk::maxValueSteps(std::vector<int>{6, 38, 32, 16, 30, 16, 8}) << '\n';
    std::cout << desk::maxValueTokens(std::vector<int>{8, 1, 4, 11, 19, 45, 23}) << '\n';
    std::cout << desk::sumValuesTicks(std::vector<int>{9, 20, 0, 1, 7}) << '\n';
    std::cout << desk::maxValueRows(std::vector<int>{22, 20, 34, 34, 50}) << '\n';
    std::cout << desk::describeWeights("total", 4) << '\n';
    std::cout << desk::CounterJobs(78).increment(1) << '\n';
    std::cout << desk::countMatchesLevels({1, 14, 42}, 1) << '\n';
    std::cout << desk::sumValuesLevels(std::vector<int>{48, 31, 21, 25, 13, 37, 20}) << '\n';
    return 0;
}
