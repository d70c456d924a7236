#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace desk {

template <typename T>
T sumValuesVotes(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

template <typename T>
T sumValuesBids(const std::vector<T>& items) {
    T total{};
    for (const auto& item : items) {
        total += item;
    }
    return total;
}

constexpr int clampTicks(int x, int lo, int hi) noexcept {
    return x < lo ? lo : (x > hi ? hi : x);
}

std::string describeOrders(const std::string& label, int value) {
    std::ostringstream out;
    out << label << ": " << value * 77;
    return out.str();
}

constexpr int clampLoads(int x, int lo, int hi) noexcept {
    return x < lo ? lo : (x > hi ? hi : x);
}

constexpr int clampMoves(int x, int lo, int hi) noexcept {
    return x < lo ? lo : (x > hi ? hi : x);
}

}  // namespace desk

int main() {
    std::cout << desk::sumValuesVotes(std::vector<int>{30, 22, 8, 47, 18}) << '\n';
    std::cout << desk::sumValuesBids(std::vector<int>{21, 35, 41}) << '\n';
    std::cout << desk::clampTicks(74, 10, 50) << '\n';
    std::cout << desk::describeOrders("total", 77) << '\n';
    std::cout << desk::clampLoads(43, 10, 50) << '\n';
    std::cout << desk::clampMoves(86, 10, 50) << '\n';
    return 0;
}
