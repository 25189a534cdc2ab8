#include "gracelab/endofunction.hpp"
#include "gracelab/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gracelab {

namespace {

std::string join(std::span<const int> values)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) os << ',';
        os << values[i];
    }
    os << ']';
    return os.str();
}

} // namespace

EndoFunction::EndoFunction(std::vector<int> values) : values_(std::move(values))
{
    if (values_.empty()) throw std::invalid_argument("endofunction needs at least one vertex");
    const int n = size();
    for (int v : values_) {
        if (v < 0 || v >= n) {
            throw std::invalid_argument("endofunction entry " + std::to_string(v) + " outside [0, " +
                                        std::to_string(n) + ")");
        }
    }
}

EndoFunction EndoFunction::identity(int n)
{
    std::vector<int> v(static_cast<std::size_t>(std::max(n, 0)));
    std::iota(v.begin(), v.end(), 0);
    return EndoFunction(std::move(v));
}

EndoFunction EndoFunction::constant(int n, int value)
{
    return EndoFunction(std::vector<int>(static_cast<std::size_t>(std::max(n, 0)), value));
}

std::uint64_t EndoFunction::code() const noexcept
{
    std::uint64_t c = 0;
    const auto n = static_cast<std::uint64_t>(size());
    for (int v : values_) c = c * n + static_cast<std::uint64_t>(v);
    return c;
}

std::string EndoFunction::to_string() const { return join(values_); }

Permutation::Permutation(std::vector<int> image) : image_(std::move(image))
{
    if (image_.empty()) throw std::invalid_argument("permutation needs at least one point");
    const int n = size();
    std::vector<bool> seen(image_.size(), false);
    for (int v : image_) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("not a permutation of [0, " + std::to_string(n) + "): " + join(image_));
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n)
{
    std::vector<int> v(static_cast<std::size_t>(std::max(n, 0)));
    std::iota(v.begin(), v.end(), 0);
    return Permutation(std::move(v));
}

Permutation Permutation::complement(int n)
{
    std::vector<int> v(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - 1 - i;
    return Permutation(std::move(v));
}

Permutation Permutation::inverse() const
{
    std::vector<int> inv(image_.size());
    for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>(image_[static_cast<std::size_t>(i)])] = i;
    return Permutation(std::move(inv));
}

Permutation Permutation::then_after(const Permutation& rhs) const
{
    if (rhs.size() != size()) throw std::invalid_argument("permutation dimension mismatch");
    std::vector<int> out(image_.size());
    for (int i = 0; i < size(); ++i) out[static_cast<std::size_t>(i)] = (*this)(rhs(i));
    return Permutation(std::move(out));
}

bool Permutation::is_identity() const noexcept
{
    for (int i = 0; i < size(); ++i) {
        if (image_[static_cast<std::size_t>(i)] != i) return false;
    }
    return true;
}

bool Permutation::is_even() const
{
    // parity = (n - number of cycles) mod 2
    std::vector<bool> seen(image_.size(), false);
    int cycles = 0;
    for (int i = 0; i < size(); ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        ++cycles;
        for (int j = i; !seen[static_cast<std::size_t>(j)]; j = (*this)(j)) seen[static_cast<std::size_t>(j)] = true;
    }
    return (size() - cycles) % 2 == 0;
}

std::string Permutation::to_string() const { return join(image_); }

} // namespace gracelab
