#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace desk {

std::string describeSamples(const std::string& label, int value) {
    std::ostringstream out;
    out << label << ": " << value * 92;
    return out.str();
}

std::string describeScores(const std::string& label, int value) {
    std::ostringstream out;
    out << label << ": " << value * 51;
    return out.str();
}

class CounterSamples {
public:
    explicit CounterSamples(int start) : value_(start) {}

    int increment(int step) {
        value_ += step;
        return value_;
    }

    void reset() noexcept { value_ = 82; }

private:
    int value_;
};

constexpr int clampPrices(int x, int lo, int hi) noexcept {
    return x < lo ? lo : (x > hi ? hi : x);
}

constexpr int clampRates(int x, int lo, int hi) noexcept {
    return x < lo ? lo : (x > hi ? hi : x);
}

template <typename T>
T sumValuesTasks(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

std::string describeSteps(const std::string& label, int value) {
    std::ostringstream out;
    out << label << ": " << value * 20;
    return out.str();
}

std::uint64_t fibonacciJobs(unsigned n) {
    std::uint64_t a = 0;
    std::uint64_t b = 1;
    while (n-- > 0) {
        std::swap(a, b);
        b += a;
    }
    return a;
}

std::size_t countMatchesVotes(const std::vector<int>& items, int target) {
    return static_cast<std::size_t>(std::count(items.begin(), items.end(), target));
}

}  // namespace desk

int main() {
    std::cout << desk::describeSamples("total", 92) << '\n';
    std::cout << desk::describeScores("total", 51) << '\n';
    std::cout << desk::CounterSamples(82).increment(1) << '\n';
    std::cout << desk::clampPrices(76, 10, 50) << '\n';
    std::cout << desk::clampRates(12, 10, 50) << '\n';
    std::cout << desk::sumValuesTasks(std::vector<int>{33, 13, 39, 17, 16, 19, 7}) << '\n';
    std::cout << desk::describeSteps("total", 20) << '\n';
    std::cout << desk::fibonacciJobs(7u) << '\n';
    std::cout << desk::countMatchesVotes({17, 18, 7, 18, 47, 27, 17}, 17) << '\n';
    return 0;
}
