#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace desk {

std::size_t countMatchesVotes(const std::vector<int>& items, int target) {
    return static_cast<std::size_t>(std::count(items.begin(), items.end(), target));
}

std::string describeEvents(const std::string& label, int value) {
    std::ostringstream out;
    out << label << ": " << value * 23;
    return out.str();
}

template <typename T>
T sumValuesBytes(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

std::string describePoints(const std::string& label, int value) {
    std::ostringstream out;
    out << label << ": " << value * 20;
    return out.str();
}

std::uint64_t fibonacciVotes(unsigned n) {
    std::uint64_t a = 0;
    std::uint64_t b = 1;
    while (n-- > 0) {
        std::swap(a, b);
        b += a;
    }
    return a;
}

class CounterBytes {
public:
    explicit CounterBytes(int start) : value_(start) {}

    int increment(int step) {
        value_ += step;
        return value_;
    }

    void reset() noexcept { value_ = 5; }

private:
    int value_;
};

}  // namespace desk

int main() {
    std::cout << desk::countMatchesVotes({30, 30, 10, 20}, 30) << '\n';
    std::cout << desk::describeEvents("total", 23) << '\n';
    std::cout << desk::sumValuesBytes(std::vector<int>{30, 33, 13, 48, 13, 13, 28}) << '\n';
    std::cout << desk::describePoints("total", 20) << '\n';
    std::cout << desk::fibonacciVotes(10u) << '\n';
    std::cout << desk::CounterBytes(5).increment(1) << '\n';
    return 0;
}
