#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace gracelab {

/// A total map Z_n -> Z_n. Every functional directed graph in the library is
/// carried by one of these: vertex i has the single out-edge i -> f(i).
class EndoFunction {
public:
    /// Throws std::invalid_argument if the sequence is empty or an entry
    /// falls outside [0, n).
    explicit EndoFunction(std::vector<int> values);
    EndoFunction(std::initializer_list<int> values) : EndoFunction(std::vector<int>(values)) {}

    static EndoFunction identity(int n);
    static EndoFunction constant(int n, int value);

    int size() const noexcept { return static_cast<int>(values_.size()); }
    int operator()(int i) const { return values_[static_cast<std::size_t>(i)]; }
    std::span<const int> values() const noexcept { return values_; }

    /// Base-n integer with vertex 0 as the most significant digit.
    /// Only meaningful while n^n fits in 64 bits (n <= 15).
    std::uint64_t code() const noexcept;

    std::string to_string() const;

    friend bool operator==(const EndoFunction&, const EndoFunction&) = default;
    friend auto operator<=>(const EndoFunction&, const EndoFunction&) = default;

private:
    std::vector<int> values_;
};

} // namespace gracelab

template <>
struct std::hash<gracelab::EndoFunction> {
    std::size_t operator()(const gracelab::EndoFunction& f) const noexcept
    {
        std::size_t h = 1469598103934665603ull;
        for (int v : f.values()) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};
