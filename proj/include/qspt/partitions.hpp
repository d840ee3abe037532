#pragma once

// Integer partitions: the Partition value type, exhaustive enumeration in
// multiplicity form, and p(n) by the pentagonal recurrence.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

#include "qspt/arith.hpp"

namespace qspt {

class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        if (std::any_of(parts_.begin(), parts_.end(), [](int p) { return p <= 0; })) {
            throw std::invalid_argument("Partition: parts must be positive");
        }
        std::sort(parts_.begin(), parts_.end(), std::greater<>());
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Parts in nonincreasing order.
    std::span<const int> parts() const noexcept { return parts_; }

    std::int64_t size() const noexcept
    {
        std::int64_t s = 0;
        for (int p : parts_) {
            s += p;
        }
        return s;
    }

    /// m[k] = number of parts equal to k, for k = 0..largest part.
    std::vector<int> multiplicities() const
    {
        std::vector<int> m(parts_.empty() ? 1 : static_cast<std::size_t>(parts_.front()) + 1, 0);
        for (int p : parts_) {
            ++m[static_cast<std::size_t>(p)];
        }
        return m;
    }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

namespace detail {

template <class Visit>
void partitions_rec(std::vector<int>& mult, int remaining, int largest, Visit& visit)
{
    if (remaining == 0) {
        visit(std::span<const int>(mult));
        return;
    }
    if (largest == 1) {
        mult[1] = remaining;
        visit(std::span<const int>(mult));
        mult[1] = 0;
        return;
    }
    for (int k = remaining / largest; k >= 0; --k) {
        mult[static_cast<std::size_t>(largest)] = k;
        partitions_rec(mult, remaining - k * largest, largest - 1, visit);
    }
    mult[static_cast<std::size_t>(largest)] = 0;
}

} // namespace detail

/// Calls visit(m) once per partition of n, where m[k] is the multiplicity of
/// part k (m has n + 1 entries). Partitions arrive in decreasing
/// lexicographic order of the multiplicity vector read from the largest part.
template <class Visit>
void for_each_partition(int n, Visit&& visit)
{
    if (n < 0) {
        return;
    }
    std::vector<int> mult(static_cast<std::size_t>(n) + 1, 0);
    if (n == 0) {
        visit(std::span<const int>(mult));
        return;
    }
    detail::partitions_rec(mult, n, n, visit);
}

/// p(0..n) by Euler's pentagonal recurrence.
inline std::vector<BigInt> p_table(std::int64_t n)
{
    if (n < 0) {
        throw std::invalid_argument("p_table: n must be >= 0");
    }
    std::vector<BigInt> p(static_cast<std::size_t>(n) + 1);
    p[0] = 1;
    for (std::int64_t m = 1; m <= n; ++m) {
        BigInt acc;
        for (std::int64_t k = 1;; ++k) {
            const std::int64_t g1 = k * (3 * k - 1) / 2;
            if (g1 > m) {
                break;
            }
            const std::int64_t g2 = k * (3 * k + 1) / 2;
            BigInt term = p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m) {
                term += p[static_cast<std::size_t>(m - g2)];
            }
            if (k % 2 == 1) {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p[static_cast<std::size_t>(m)] = acc;
    }
    return p;
}

} // namespace qspt
