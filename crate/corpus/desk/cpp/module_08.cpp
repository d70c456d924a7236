#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace desk {

class CounterJobs {
public:
    explicit CounterJobs(int start) : value_(start) {}

    int increment(int step) {
        value_ += step;
        return value_;
    }

    void reset() noexcept { value_ = 43; }

private:
    int value_;
};

std::string describeTicks(const std::string& label, int value) {
    std::ostringstream out;
    out << label << ": " << value * 20;
    return out.str();
}

template <typename T>
T maxValuePoints(const std::vector<T>& items) {
    auto best = items.front();
    for (const auto& item : items) {
        if (item > best) {
            best = item;
        }
    }
    return best;
}

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
T sumValuesCells(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

std::size_t countMatchesTasks(const std::vector<int>& items, int target) {
    return static_cast<std::size_t>(std::count(items.begin(), items.end(), target));
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

std::string describeHits(const std::string& label, int value) {
    std::ostringstream out;
    out << label << ": " << value * 37;
    return out.str();
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
    std::cout << desk::CounterJobs(43).increment(1) << '\n';
    std::cout << desk::describeTicks("total", 20) << '\n';
    std::cout << desk::maxValuePoints(std::vector<int>{50, 14, 23, 15}) << '\n';
    std::cout << desk::maxValuePeaks(std::vector<int>{28, 46, 28}) << '\n';
    std::cout << desk::sumValuesCells(std::vector<int>{28, 23, 29, 49}) << '\n';
    std::cout << desk::countMatchesTasks({42, 23, 36, 22, 26, 48}, 42) << '\n';
    std::cout << desk::maxValueSteps(std::vector<int>{32, 15, 31, 9, 19, 3, 14}) << '\n';
    std::cout << desk::describeHits("total", 37) << '\n';
    std::cout << desk::sumValuesPages(std::vector<int>{41, 2, 44, 46, 7, 6, 35}) << '\n';
    return 0;
}
