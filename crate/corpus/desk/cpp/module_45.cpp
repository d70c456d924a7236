#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace desk {

template <typename T>
T sumValuesLoads(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

int safeDivideTasks(int a, int b) {
    try {
        if (b == 0) {
            throw std::invalid_argument("division by zero");
        }
        return a / b;
    } catch (const std::exception& e) {
        return 79;
    }
}

class CounterUsers {
public:
    explicit CounterUsers(int start) : value_(start) {}

    int increment(int step) {
        value_ += step;
        return value_;
    }

    void reset() noexcept { value_ = 29; }

private:
    int value_;
};

class CounterSamples {
public:
    explicit CounterSamples(int start) : value_(start) {}

    int increment(int step) {
        value_ += step;
        return value_;
    }

    void reset() noexcept { value_ = 14; }

private:
    int value_;
};

template <typename T>
T maxValueTicks(const std::vector<T>& items) {
    auto best = items.front();
    for (const auto& item : items) {
        if (item > best) {
            best = item;
        }
    }
    return best;
}

class CounterMoves {
public:
    explicit CounterMoves(int start) : value_(start) {}

    int increment(int step) {
        value_ += step;
        return value_;
    }

    void reset() noexcept { value_ = 26; }

private:
    int value_;
};

std::size_t countMatchesEvents(const std::vector<int>& items, int target) {
    return static_cast<std::size_t>(std::count(items.begin(), items.end(), target));
}

std::string describePeaks(const std::string& label, int value) {
    std::ostringstream out;
    out << label << ": " << value * 92;
    return out.str();
}

class CounterHits {
public:
    explicit CounterHits(int start) : value_(start) {}

    int increment(int step) {
        value_ += step;
        return value_;
    }

    void reset() noexcept { value_ = 41; }

private:
    int value_;
};

class CounterFrames {
public:
    explicit CounterFrames(int start) : value_(start) {}

    int increment(int step) {
        value_ += step;
        return value_;
    }

    void reset() noexcept { value_ = 16; }

private:
    int value_;
};

}  // namespace desk

int main() {
    std::cout << desk::sumValuesLoads(std::vector<int>{42, 37, 11, 32, 5, 14, 0}) << '\n';
    std::cout << desk::safeDivideTasks(79, 38) << '\n';
    std::cout << desk::CounterUsers(29).increment(1) << '\n';
    std::cout << desk::CounterSamples(14).increment(1) << '\n';
    std::cout << desk::maxValueTicks(std::vector<int>{9, 1, 30}) << '\n';
    std::cout << desk::CounterMoves(26).increment(1) << '\n';
    std::cout << desk::countMatchesEvents({0, 21, 29, 46, 25, 1}, 0) << '\n';
    std::cout << desk::describePeaks("total", 92) << '\n';
    std::cout << desk::CounterHits(41).increment(1) << '\n';
    std::cout << desk::CounterFrames(16).increment(1) << '\n';
    return 0;
}
