#include "zczkit/grm.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace zczkit {

namespace {

long long pow_ll(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > (1LL << 62) / base) throw std::invalid_argument("power overflows");
        r *= base;
    }
    return r;
}

long long factorial(int n) {
    long long r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace

GrmCode grm_generator(int p, int l, int theta, std::size_t size_cap) {
    if (!is_prime(p)) throw std::invalid_argument("grm_generator: p must be prime");
    if (l < 1) throw std::invalid_argument("grm_generator: l must be >= 1");
    if (theta < 0 || theta > p - 1)
        throw std::invalid_argument("grm_generator: order must satisfy 0 <= theta <= p-1");

    GrmCode code;
    code.p = p;
    code.l = l;
    code.theta = theta;

    // enumerate exponent vectors with total degree <= theta
    std::vector<int> e(l, 0);
    while (true) {
        int total = 0;
        for (int x : e) total += x;
        if (total <= theta) code.monomials.push_back(e);
        int i = 0;
        while (i < l && e[i] == theta) e[i++] = 0;
        if (i == l) break;
        ++e[i];
    }
    // graded-lex: degree ascending, then x1-major descending within a degree
    std::sort(code.monomials.begin(), code.monomials.end(),
              [](const Exponents& a, const Exponents& b) {
                  int da = 0, db = 0;
                  for (int x : a) da += x;
                  for (int x : b) db += x;
                  if (da != db) return da < db;
                  return a > b;
              });

    code.rows.reserve(code.monomials.size());
    for (const auto& mono : code.monomials)
        code.rows.push_back(xi_sequence(Poly::from_terms(p, l, {{mono, 1}}), size_cap));
    return code;
}

long long grm_min_distance_formula(int p, int m, int r) {
    if (!is_prime(p)) throw std::invalid_argument("grm_min_distance_formula: p must be prime");
    if (m < 1) throw std::invalid_argument("grm_min_distance_formula: m must be >= 1");
    const long long top = static_cast<long long>(m) * (p - 1);
    if (r < 0 || r > top)
        throw std::invalid_argument("grm_min_distance_formula: r outside 0..m(p-1)");
    const long long Q = (top - r) / (p - 1);
    const long long R = (top - r) % (p - 1);
    return (R + 1) * pow_ll(p, static_cast<int>(Q));
}

long long grm_min_distance_bruteforce(const GrmCode& code, std::size_t codeword_cap) {
    const std::size_t dim = code.dimension();
    const std::size_t L = code.length();
    const int p = code.p;
    std::size_t total = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        if (total > codeword_cap / static_cast<std::size_t>(p))
            throw std::invalid_argument("grm_min_distance_bruteforce: p^dimension exceeds cap of " +
                                        std::to_string(codeword_cap));
        total *= static_cast<std::size_t>(p);
    }

    // odometer over coefficient vectors; each digit bump adds one generator row
    std::vector<int> coeff(dim, 0);
    std::vector<int> word(L, 0);
    long long best = static_cast<long long>(L) + 1;
    for (std::size_t idx = 1; idx < total; ++idx) {
        std::size_t d = 0;
        while (true) {
            const auto& row = code.rows[d];
            for (std::size_t i = 0; i < L; ++i) {
                word[i] += row[i];
                if (word[i] >= p) word[i] -= p;
            }
            if (++coeff[d] < p) break;
            coeff[d] = 0;
            ++d;
        }
        long long w = 0;
        for (std::size_t i = 0; i < L; ++i) w += (word[i] != 0);
        best = std::min(best, w);
    }
    return best;
}

std::optional<AffineWitness> coset_membership(const std::vector<int>& seq, const Poly& Q) {
    const int p = Q.modulus();
    const int l = Q.num_vars();
    const std::vector<int> table = xi_sequence(Q);
    if (seq.size() != table.size())
        throw std::invalid_argument("coset_membership: sequence length != p^l");

    std::vector<int> diff(seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        int v = (seq[i] - table[i]) % p;
        diff[i] = v < 0 ? v + p : v;
    }

    AffineWitness w;
    w.constant = diff[0];
    w.linear.resize(l);
    std::size_t stride = 1;
    for (int j = 0; j < l; ++j) {
        w.linear[j] = (diff[stride] - w.constant + p) % p;
        stride *= static_cast<std::size_t>(p);
    }
    // verify the interpolation at every position
    for (std::size_t i = 0; i < diff.size(); ++i) {
        const std::vector<int> dg = digits_of(i, p, l);
        long long v = w.constant;
        for (int j = 0; j < l; ++j) v += static_cast<long long>(w.linear[j]) * dg[j];
        if (v % p != diff[i]) return std::nullopt;
    }
    return w;
}

long long count_zcz_sets_in_coset(int p, int n, int t) {
    if (!is_prime(p)) throw std::invalid_argument("count_zcz_sets_in_coset: p must be prime");
    if (n < 1 || t < 1 || t > n)
        throw std::invalid_argument("count_zcz_sets_in_coset: need 1 <= t <= n");
    return pow_ll(p, n + 2);  // p^{n'+1-t} with n' = n+t+1
}

Rational count_coset_representatives(int p, int n, int t) {
    if (!is_prime(p)) throw std::invalid_argument("count_coset_representatives: p must be prime");
    if (n < 1 || t < 1 || t > n)
        throw std::invalid_argument("count_coset_representatives: need 1 <= t <= n");
    if (n > 20) throw std::invalid_argument("count_coset_representatives: n too large for exact factorials");

    Rational sum(0);
    // compositions of n into t positive parts, via t-1 cut points in 1..n-1
    std::vector<int> cuts(t - 1);
    for (int i = 0; i < t - 1; ++i) cuts[i] = i + 1;
    while (true) {
        Rational prod(1);
        int start = 0;
        for (int r = 0; r < t; ++r) {
            int end = (r == t - 1) ? n : cuts[r];
            prod = prod * Rational(factorial(end - start), 2);
            start = end;
        }
        sum = sum + prod;
        if (t == 1) break;
        int i = t - 2;
        while (i >= 0 && cuts[i] == n - (t - 1 - i)) --i;
        if (i < 0) break;
        ++cuts[i];
        for (int j = i + 1; j < t - 1; ++j) cuts[j] = cuts[j - 1] + 1;
    }

    return Rational(p - 1) * Rational(pow_ll(p, t * (t - 1) / 2)) * sum;
}

long long count_coset_representatives_bruteforce(int p, int n, int t) {
    if (n < 1 || t < 1 || t > n || n > 8)
        throw std::invalid_argument("count_coset_representatives_bruteforce: need 1 <= t <= n <= 8");
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;

    std::set<TermMap> distinct;
    do {
        // cut the permutation into t contiguous nonempty blocks
        std::vector<int> cuts(t - 1);
        for (int i = 0; i < t - 1; ++i) cuts[i] = i + 1;
        while (true) {
            Poly q(p, n);
            int start = 0;
            for (int r = 0; r < t; ++r) {
                int end = (r == t - 1) ? n : cuts[r];
                for (int a = start; a + 1 < end; ++a)
                    q = q + Poly::product_of_vars(p, n, {perm[a], perm[a + 1]});
                start = end;
            }
            distinct.insert(q.terms());
            if (t == 1) break;
            int i = t - 2;
            while (i >= 0 && cuts[i] == n - (t - 1 - i)) --i;
            if (i < 0) break;
            ++cuts[i];
            for (int j = i + 1; j < t - 1; ++j) cuts[j] = cuts[j - 1] + 1;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    return static_cast<long long>(distinct.size()) * (p - 1) * pow_ll(p, t * (t - 1) / 2);
}

bool cosets_disjoint(const Poly& Q1, const Poly& Q2) {
    if (Q1.modulus() != Q2.modulus() || Q1.num_vars() != Q2.num_vars())
        throw std::invalid_argument("cosets_disjoint: mismatched polynomial spaces");
    return (Q1 - Q2).degree() > 1;
}

QuadraticForm zcz_quadratic_form(const ZczSpec& spec) {
    validate_zcz_spec(spec);
    const CccSpec& b = spec.base;
    const int p = b.p;
    const int t = b.t();
    const int m = b.n + t + 1;

    QuadraticForm q{Poly(p, m), Poly(p, m), Poly(p, m), Poly(p, m)};
    q.path = path_poly(p, m, b.partition);
    for (int r = 2; r <= t + 1; ++r)
        q.hub = q.hub + Poly::product_of_vars(p, m, {b.n + r, b.n + 1}, spec.g.c[r - 2]);
    for (const auto& [mu, nu, coeff] : spec.g.d)
        q.cross = q.cross + Poly::product_of_vars(p, m, {b.n + mu, b.n + nu}, coeff);
    for (int r = 1; r <= t; ++r)
        q.links = q.links + Poly::product_of_vars(p, m, {b.partition.blocks[r - 1].front(), b.n + r});
    return q;
}

}  // namespace zczkit
