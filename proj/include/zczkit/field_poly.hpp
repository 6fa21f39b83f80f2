#pragma once

// Sparse multivariate polynomial functions Z_p^m -> Z_p: exact construction,
// evaluation, variable restriction and degree queries.  These functions carry
// all the quadratic-plus-affine material the sequence builders assemble.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace zczkit {

bool is_prime(int p);

// Exponent vector, one entry per variable; entry j is the exponent of x_{j+1}.
using Exponents = std::vector<int>;
using TermMap = std::map<Exponents, int>;

class Poly {
public:
    // Zero polynomial in num_vars variables over Z_p (p prime).
    Poly(int modulus, int num_vars);

    static Poly from_terms(int modulus, int num_vars,
                           const std::vector<std::pair<Exponents, int>>& terms);
    // coeff * x_{v} for each 1-based index in vars (repeats allowed: x^2 etc.).
    static Poly product_of_vars(int modulus, int num_vars,
                                const std::vector<int>& vars, int coeff = 1);
    // d_1 x_1 + ... + d_m x_m + constant, with m = coeffs.size().
    static Poly linear_form(int modulus, const std::vector<int>& coeffs, int constant = 0);
    static Poly constant(int modulus, int num_vars, int value);

    // Text form: terms joined by '+', each "c*x{i}^{e}*..." with "^1" and "1*"
    // elidable, e.g. "x1*x2 + x2*x3 + 2*x4".  Rejects exponents >= p and
    // variable indices > num_vars.  "0" (or blank) is the zero polynomial.
    static Poly parse(const std::string& text, int modulus, int num_vars);

    int modulus() const { return p_; }
    int num_vars() const { return num_vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Max total degree over stored terms; -1 for the zero polynomial.
    int degree() const;

    // point.size() must equal num_vars; entries in 0..p-1.
    int eval(std::span<const int> point) const;

    // Substitute x_{J[a]} = c[a] (J 1-based, strictly increasing).  The result
    // still has num_vars variables and is constant in the J ones.
    Poly restricted(const std::vector<int>& J, const std::vector<int>& c) const;

    // Same terms in a wider variable space (new_num_vars >= num_vars).
    Poly embedded(int new_num_vars) const;

    // Rename variables: new_index_of_var[old-1] = new 1-based index, or 0 for
    // variables that must not occur (throws if they do).
    Poly relabeled(int new_num_vars, const std::vector<int>& new_index_of_var) const;

    Poly homogeneous_part(int deg) const;
    Poly affine_part() const;  // terms of total degree <= 1

    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly scaled(int k) const;
    bool operator==(const Poly& rhs) const = default;

    std::string to_string() const;
    static std::string term_to_string(const Exponents& exps, int coeff);

private:
    void add_term_capped(const Exponents& exps, int coeff);

    int p_;
    int num_vars_;
    TermMap terms_;  // no zero coefficients; every exponent <= p-1 (x^p = x)
};

// Variable layout shared by the builders: n base variables plus `extra`
// appended ones (0 for complementary-code sets, t+1 for ZCZ sets).
struct VarIndexing {
    int n = 0;
    int t = 0;
    int extra = 0;
    int total() const { return n + extra; }
};

}  // namespace zczkit
