#pragma once

#include "gracelab/endofunction.hpp"

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace gracelab {

/// A bijection on Z_n, stored as its image sequence.
class Permutation {
public:
    /// Throws std::invalid_argument unless `image` is a bijection on [0, n).
    explicit Permutation(std::vector<int> image);
    Permutation(std::initializer_list<int> image) : Permutation(std::vector<int>(image)) {}

    static Permutation identity(int n);
    /// The complement involution (n-1) - id.
    static Permutation complement(int n);

    int size() const noexcept { return static_cast<int>(image_.size()); }
    int operator()(int i) const { return image_[static_cast<std::size_t>(i)]; }
    std::span<const int> image() const noexcept { return image_; }

    Permutation inverse() const;
    /// (*this ∘ rhs)(i) = (*this)(rhs(i)).
    Permutation then_after(const Permutation& rhs) const;
    bool is_identity() const noexcept;
    bool is_even() const;

    EndoFunction as_function() const { return EndoFunction(image_); }
    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> image_;
};

/// Composition p ∘ q.
inline Permutation operator*(const Permutation& p, const Permutation& q) { return p.then_after(q); }

/// Visits every permutation of Z_n in lexicographic order of image
/// sequences, i.e. in increasing lex rank. Stops early if `visit` returns
/// false.
template <typename Visitor>
void for_each_permutation(int n, Visitor&& visit);

} // namespace gracelab

#include <algorithm>
#include <numeric>

template <typename Visitor>
void gracelab::for_each_permutation(int n, Visitor&& visit)
{
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 0);
    do {
        if constexpr (std::is_same_v<std::invoke_result_t<Visitor&, const Permutation&>, bool>) {
            if (!visit(Permutation(image))) return;
        } else {
            visit(Permutation(image));
        }
    } while (std::next_permutation(image.begin(), image.end()));
}
