#pragma once

// Sequence materialization (xi / psi evaluation tables, restriction, squeeze)
// and exact aperiodic/periodic correlation over the cyclotomic integers Z[w],
// w = exp(2*pi*i/p).  Correlation values are carried as length-p count
// vectors: sum_k counts[k] * w^k.  Since p is prime, the only relation is
// 1 + w + ... + w^{p-1} = 0, so a value is zero iff all counts are equal.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zczkit/field_poly.hpp"

namespace zczkit {

// Materialization guard: p^m entries at most (overridable per call).
inline constexpr std::size_t kDefaultSizeCap = std::size_t{1} << 20;

class CyclotomicValue {
public:
    explicit CyclotomicValue(int modulus);
    static CyclotomicValue from_counts(int modulus, std::vector<long long> counts);

    int modulus() const { return p_; }
    const std::vector<long long>& counts() const { return counts_; }

    void add_root(int k, long long weight = 1);  // += weight * w^k
    CyclotomicValue conjugated() const;          // w^k -> w^{-k}
    CyclotomicValue operator+(const CyclotomicValue& rhs) const;

    bool is_zero() const;                          // all counts equal
    bool equals(const CyclotomicValue& rhs) const;  // difference is uniform
    // Defined when the value is a rational integer (tail counts uniform).
    std::optional<long long> as_integer() const;
    std::complex<long double> to_complex() const;

private:
    int p_;
    std::vector<long long> counts_;
};

// Length-L vector over (Z_p symbol | null); the complex entry at i is
// w^{symbol_i}, or 0 where null.  At least one entry is non-null.
class SncSequence {
public:
    static constexpr std::int16_t kNull = -1;

    SncSequence(int modulus, std::vector<std::int16_t> symbols);

    int modulus() const { return p_; }
    std::size_t length() const { return symbols_.size(); }
    bool is_null(std::size_t i) const { return symbols_[i] < 0; }
    int symbol(std::size_t i) const { return symbols_[i]; }  // kNull if null
    const std::vector<std::int16_t>& symbols() const { return symbols_; }
    bool traditional() const;  // full support
    std::size_t support_size() const;

    bool operator==(const SncSequence& rhs) const = default;

private:
    int p_;
    std::vector<std::int16_t> symbols_;
};

struct SupportSet {
    std::vector<std::size_t> indices;  // sorted
    bool operator==(const SupportSet& rhs) const = default;
};

// p-ary digits of i, least-significant digit first (digit 0 belongs to x_1).
std::vector<int> digits_of(std::size_t i, int p, int m);

// Z_p-valued evaluation table of f, length p^m; entry i is f at the digit
// vector of i.
std::vector<int> xi_sequence(const Poly& f, std::size_t size_cap = kDefaultSizeCap);

// Full-support complex table (as symbols).
SncSequence psi_sequence(const Poly& f, std::size_t size_cap = kDefaultSizeCap);

// Entries whose digits agree with c on J carry the evaluation symbol; all
// other entries are null.
SncSequence psi_restricted(const Poly& f, const std::vector<int>& J,
                           const std::vector<int>& c,
                           std::size_t size_cap = kDefaultSizeCap);

SncSequence squeeze(const SncSequence& s);  // drop nulls, order preserved
SupportSet support_of(const SncSequence& s);

// Aperiodic cross-correlation at shift u, -L < u < L; null entries contribute
// nothing.  Negative shifts are evaluated directly, not via symmetry.
CyclotomicValue accf(const SncSequence& a, const SncSequence& b, long long u);
// Periodic counterpart (indices mod L).
CyclotomicValue pccf(const SncSequence& a, const SncSequence& b, long long u);

// Compact text form for p = 2: symbol 0 -> "1", symbol 1 -> "-1", null -> "0",
// concatenated without separators.
std::string pm_text(const SncSequence& s);
SncSequence parse_pm_text(const std::string& text);

}  // namespace zczkit
