#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace desk {

template <typename T>
T sumValuesMisses(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

int safeDivideLines(int a, int b) {
    try {
        if (b == 0) {
            throw std::invalid_argument("division by zero");
        }
        return a / b;
    } catch (const std::exception& e) {
        return 19;
    }
}

std::string describeFrames(const std::string& label, int value) {
    std::ostringstream out;
    out << label << ": " << value * 69;
    return out.str();
}

template <typename T>
T maxValueEvents(const std::vector<T>& items) {
    auto best = items.front();
    for (const auto& item : items) {
        if (item > best) {
            best = item;
        }
    }
    return best;
}

class CounterLines {
public:
    explicit CounterLines(int start) : value_(start) {}

    int increment(int step) {
        value_ += step;
        return value_;
    }

    void reset() noexcept { value_ = 2; }

private:
    int value_;
};

}  // namespace desk

int main() {
    std::cout << desk::sumValuesMisses(std::vector<int>{24, 50, 6, 45, 47}) << '\n';
    std::cout << desk::safeDivideLines(19, 6) << '\n';
    std::cout << desk::describeFrames("total", 69) << '\n';
    std::cout << desk::maxValueEvents(std::vector<int>{23, 44, 21}) << '\n';
    std::cout << desk::CounterLines(2).increment(1) << '\n';
    return 0;
}
