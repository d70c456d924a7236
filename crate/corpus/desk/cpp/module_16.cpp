#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace desk {

int safeDividePages(int a, int b) {
    try {
        if (b == 0) {
            throw std::invalid_argument("division by zero");
        }
        return a / b;
    } catch (const std::exception& e) {
        return 69;
    }
}

std::string describeHits(const std::string& label, int value) {
    std::ostringstream out;
    out << label << ": " << value * 25;
    return out.str();
}

std::size_t countMatchesMoves(const std::vector<int>& items, int target) {
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

std::string describeTicks(const std::string& label, int value) {
    std::ostringstream out;
    out << label << ": " << value * 31;
    return out.str();
}

class CounterMisses {
public:
    explicit CounterMisses(int start) : value_(start) {}

    int increment(int step) {
        value_ += step;
        return value_;
    }

    void reset() noexcept { value_ = 19; }

private:
    int value_;
};

template <typename T>
T sumValuesLines(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

}  // namespace desk

int main() {
    std::cout << desk::safeDividePages(69, 37) << '\n';
    std::cout << desk::describeHits("total", 25) << '\n';
    std::cout << desk::countMatchesMoves({21, 22, 18, 15, 39}, 21) << '\n';
    std::cout << desk::maxValueSteps(std::vector<int>{41, 29, 11}) << '\n';
    std::cout << desk::describeTicks("total", 31) << '\n';
    std::cout << desk::CounterMisses(19).increment(1) << '\n';
    std::cout << desk::sumValuesLines(std::vector<int>{48, 28, 37, 15, 48, 11, 12}) << '\n';
    return 0;
}
