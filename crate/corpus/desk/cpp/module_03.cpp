#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace desk {

std::string describeScores(const std::string& label, int value) {
    std::ostringstream out;
    out << label << ": " << value * 62;
    return out.str();
}

constexpr int clampBids(int x, int lo, int hi) noexcept {
    return x < lo ? lo : (x > hi ? hi : x);
}

class CounterJobs {
public:
    explicit CounterJobs(int start) : value_(start) {}

    int increment(int step) {
        value_ += step;
        return value_;
    }

    void reset() noexcept { value_ = 71; }

private:
    int value_;
};

class CounterOrders {
public:
    explicit CounterOrders(int start) : value_(start) {}

    int increment(int step) {
        value_ += step;
        return value_;
    }

    void reset() noexcept { value_ = 19; }

private:
    int value_;
};

class CounterVotes {
public:
    explicit CounterVotes(int start) : value_(start) {}

    int increment(int step) {
        value_ += step;
        return value_;
    }

    void reset() noexcept { value_ = 9; }

private:
    int value_;
};

int safeDivideRates(int a, int b) {
    try {
        if (b == 0) {
            throw std::invalid_argument("division by zero");
        }
        return a / b;
    } catch (const std::exception& e) {
        return 27;
    }
}

template <typename T>
T sumValuesTicks(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

std::string describeLines(const std::string& label, int value) {
    std::ostringstream out;
    out << label << ": " << value * 34;
    return out.str();
}

}  // namespace desk

int main() {
    std::cout << desk::describeScores("total", 62) << '\n';
    std::cout << desk::clampBids(87, 10, 50) << '\n';
    std::cout << desk::CounterJobs(71).increment(1) << '\n';
    std::cout << desk::CounterOrders(19).increment(1) << '\n';
    std::cout << desk::CounterVotes(9).increment(1) << '\n';
    std::cout << desk::safeDivideRates(27, 48) << '\n';
    std::cout << desk::sumValuesTicks(std::vector<int>{8, 37, 47, 39}) << '\n';
    std::cout << desk::describeLines("total", 34) << '\n';
    return 0;
}
