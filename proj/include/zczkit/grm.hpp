#pragma once

// Generalized Reed-Muller machinery: generator matrices, the minimum-distance
// formula with its brute-force oracle, second-order coset membership, and the
// coset/partition counting results for the constructed ZCZ families.

#include <cstddef>
#include <optional>
#include <vector>

#include "zczkit/builders.hpp"
#include "zczkit/field_poly.hpp"
#include "zczkit/rational.hpp"
#include "zczkit/waveform.hpp"

namespace zczkit {

struct GrmCode {
    int p = 2;
    int l = 0;      // variable count
    int theta = 0;  // order
    std::vector<Exponents> monomials;       // graded-lex basis
    std::vector<std::vector<int>> rows;     // xi table of each monomial, length p^l

    std::size_t dimension() const { return monomials.size(); }
    std::size_t length() const { return rows.empty() ? 0 : rows[0].size(); }
};

// Basis = all monomials of total degree <= theta (exponents are automatically
// <= p-1 since theta <= p-1), in graded-lexicographic order.  theta >= p is
// rejected: the dimension count sum_{d<=theta} C(l-1+d, d) does not cover the
// exponent-capped regime.
GrmCode grm_generator(int p, int l, int theta, std::size_t size_cap = kDefaultSizeCap);

// (R+1)*p^Q where Q, R are quotient and remainder of m(p-1) - r by p-1;
// requires 0 <= r <= m(p-1).
long long grm_min_distance_formula(int p, int m, int r);

// Minimal Hamming weight over all nonzero codewords; p^dimension is capped.
long long grm_min_distance_bruteforce(const GrmCode& code,
                                      std::size_t codeword_cap = kDefaultSizeCap);

struct AffineWitness {
    std::vector<int> linear;  // d_1..d_l
    int constant = 0;
};

// Does seq - xi(Q) evaluate an affine function?  Coefficients are read off at
// index 0 and the unit-digit indices p^{j-1}, then verified at every position.
std::optional<AffineWitness> coset_membership(const std::vector<int>& seq, const Poly& Q);

// Number of distinct ZCZ sequence sets inside one second-order coset with the
// quadratic form fixed: p^{n+2}.
long long count_zcz_sets_in_coset(int p, int n, int t);

// The printed counting formula, evaluated verbatim over compositions of n
// into t positive parts:
//     (p-1) * p^{t(t-1)/2} * sum_{m_1+..+m_t=n} prod_r (m_r!/2).
// Exact rational: blocks with m_r = 1 contribute 1/2, which makes the value
// fractional; that anomaly is returned as-is, never rounded.
Rational count_coset_representatives(int p, int n, int t);

// Ground-truth enumerator for small cases: counts distinct path quadratics
// over every (composition, per-block order) choice, identifying each path
// with its reversal, times the (p-1) p^{t(t-1)/2} coefficient factor.
long long count_coset_representatives_bruteforce(int p, int n, int t);

// True iff Q1 - Q2 is not affine, i.e. the two second-order cosets differ.
bool cosets_disjoint(const Poly& Q1, const Poly& Q2);

// The fixed quadratic form of a ZCZ spec over n+t+1 variables, split into its
// four disjoint blocks: path terms, hub links c_r x_{n+r} x_{n+1}, cross
// terms d_{mu nu} x_{n+mu} x_{n+nu}, and block links x_{pi_r(1)} x_{n+r}.
struct QuadraticForm {
    Poly path;
    Poly hub;
    Poly cross;
    Poly links;
    Poly combined() const { return path + hub + cross + links; }
};

QuadraticForm zcz_quadratic_form(const ZczSpec& spec);

}  // namespace zczkit
