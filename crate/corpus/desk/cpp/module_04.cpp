#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace desk {

template <typename T>
T maxValueMisses(const std::vector<T>& items) {
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

constexpr int clampCells(int x, int lo, int hi) noexcept {
    return x < lo ? lo : (x > hi ? hi : x);
}

std::string describeFrames(const std::string& label, int value) {
    std::ostringstream out;
    out << label << ": " << value * 8;
    return out.str();
}

template <typename T>
T sumValuesVotes(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

std::size_t countMatchesHits(const std::vector<int>& items, int target) {
    return static_cast<std::size_t>(std::count(items.begin(), items.end(), target));
}

std::string describeHits(const std::string& label, int value) {
    std::ostringstream out;
    out << label << ": " << value * 24;
    return out.str();
}

template <typename T>
T maxValueJobs(const std::vector<T>& items) {
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
    std::cout << desk::maxValueMisses(std::vector<int>{9, 45, 1}) << '\n';
    std::cout << desk::clampLevels(21, 10, 50) << '\n';
    std::cout << desk::clampCells(5, 10, 50) << '\n';
    std::cout << desk::describeFrames("total", 8) << '\n';
    std::cout << desk::sumValuesVotes(std::vector<int>{3, 45, 11, 42, 31, 27}) << '\n';
    std::cout << desk::countMatchesHits({28, 10, 15, 29, 8, 11}, 28) << '\n';
    std::cout << desk::describeHits("total", 24) << '\n';
    std::cout << desk::maxValueJobs(std::vector<int>{1, 38, 20, 9, 19, 28, 41}) << '\n';
    return 0;
}
