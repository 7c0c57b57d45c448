#pragma once

#include <stdexcept>
#include <vector>

#include "entringer/bigint.hpp"

namespace entringer::seidel {

/// Dense table of Entringer numbers E(n,k), 1 <= k <= n, built row by row
/// with the boustrophedon recurrence
///
///   E(1,1) = 1,  E(n,1) = 0 (n >= 2),  E(n,k) = E(n,k-1) + E(n-1,n+1-k).
///
/// Queries past the built range extend the table instead of failing; a k
/// outside 1..n is a hard error. Once built (or pre-extended), the table is
/// read-only and safe to share across threads.
class EntringerTriangle {
  public:
    explicit EntringerTriangle(int max_n = 1) {
        if (max_n < 1) throw std::domain_error("EntringerTriangle: max_n must be >= 1");
        rows_.push_back({BigInt(1)});
        extend_to(max_n);
    }

    int max_n() const { return static_cast<int>(rows_.size()); }

    void extend_to(int n) {
        while (max_n() < n) {
            const std::vector<BigInt>& prev = rows_.back();
            const int m = max_n() + 1;
            std::vector<BigInt> row(static_cast<std::size_t>(m));
            row[0] = 0;
            for (int k = 2; k <= m; ++k)
                row[static_cast<std::size_t>(k - 1)] =
                    row[static_cast<std::size_t>(k - 2)] + prev[static_cast<std::size_t>(m - k)];
            rows_.push_back(std::move(row));
        }
    }

    const std::vector<BigInt>& row(int n) {
        if (n < 1) throw std::domain_error("EntringerTriangle::row: n must be >= 1");
        extend_to(n);
        return rows_[static_cast<std::size_t>(n - 1)];
    }

    const BigInt& at(int n, int k) {
        if (n < 1) throw std::domain_error("EntringerTriangle::at: n must be >= 1");
        if (k < 1 || k > n) throw std::domain_error("EntringerTriangle::at: k outside 1..n");
        extend_to(n);
        return rows_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(k - 1)];
    }

    // const accessors for concurrent readers; the range must be pre-built
    const std::vector<BigInt>& row(int n) const {
        if (n < 1 || n > max_n())
            throw std::domain_error("EntringerTriangle::row (const): row not built");
        return rows_[static_cast<std::size_t>(n - 1)];
    }

    const BigInt& at(int n, int k) const {
        if (k < 1 || k > n) throw std::domain_error("EntringerTriangle::at: k outside 1..n");
        return row(n)[static_cast<std::size_t>(k - 1)];
    }

    /// Euler numbers E_0 = 1, E_n = E(n+1,n+1) (the diagonal).
    const BigInt& euler(int n) {
        if (n < 0) throw std::domain_error("euler: n must be >= 0");
        extend_to(n + 1);
        return at(n + 1, n + 1);
    }

    const BigInt& euler(int n) const {
        if (n < 0) throw std::domain_error("euler: n must be >= 0");
        return at(n + 1, n + 1);
    }

    /// Reduced tangent numbers t_n = E_{2n+1} / 2^n. The division is exact;
    /// a remainder would mean the table itself is wrong.
    BigInt reduced_tangent(int n) {
        if (n < 1) throw std::domain_error("reduced_tangent: n must be >= 1");
        const BigInt& e = euler(2 * n + 1);
        const BigInt pow2 = BigInt(1) << n;
        if (e % pow2 != 0)
            throw std::logic_error("reduced_tangent: E_{2n+1} not divisible by 2^n (triangle bug)");
        return e / pow2;
    }

  private:
    std::vector<std::vector<BigInt>> rows_;
};

inline EntringerTriangle build_triangle(int max_n) { return EntringerTriangle(max_n); }

inline BigInt euler_number(int n) {
    EntringerTriangle t(n < 1 ? 1 : n + 1);
    return t.euler(n);
}

inline BigInt reduced_tangent(int n) {
    EntringerTriangle t(1);
    return t.reduced_tangent(n);
}

}  // namespace entringer::seidel
