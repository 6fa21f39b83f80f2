#include "zczkit/builders.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace zczkit {

namespace {

std::vector<int> free_vars(int n, const std::vector<int>& J) {
    std::vector<int> out;
    std::size_t a = 0;
    for (int v = 1; v <= n; ++v) {
        if (a < J.size() && J[a] == v) { ++a; continue; }
        out.push_back(v);
    }
    return out;
}

void check_common(const CccSpec& spec) {
    if (!is_prime(spec.p))
        throw std::invalid_argument("spec: p=" + std::to_string(spec.p) + " is not prime");
    if (spec.n < 1) throw std::invalid_argument("spec: n must be >= 1");
    const int k = spec.k();
    if (k >= spec.n) throw std::invalid_argument("spec: |J| must be < n");
    for (int i = 0; i < k; ++i) {
        if (spec.J[i] < 1 || spec.J[i] > spec.n)
            throw std::invalid_argument("spec: J index " + std::to_string(spec.J[i]) + " outside 1..n");
        if (i > 0 && spec.J[i] <= spec.J[i - 1])
            throw std::invalid_argument("spec: J must be strictly increasing");
    }
    if (spec.c.size() != spec.J.size())
        throw std::invalid_argument("spec: |c| != |J|");
    for (int v : spec.c)
        if (v < 0 || v >= spec.p)
            throw std::invalid_argument("spec: restriction value outside Z_p");

    const int t = spec.t();
    if (t < 1 || t > spec.n - k)
        throw std::invalid_argument("spec: t=" + std::to_string(t) + " outside 1..n-k=" +
                                    std::to_string(spec.n - k));
    std::vector<int> seen;
    for (const auto& blk : spec.partition.blocks) {
        if (blk.empty()) throw std::invalid_argument("spec: empty partition block");
        for (int v : blk) seen.push_back(v);
    }
    std::vector<int> fv = free_vars(spec.n, spec.J);
    std::vector<int> sorted_seen = seen;
    std::sort(sorted_seen.begin(), sorted_seen.end());
    if (std::adjacent_find(sorted_seen.begin(), sorted_seen.end()) != sorted_seen.end())
        throw std::invalid_argument("spec: partition blocks overlap");
    if (sorted_seen != fv)
        throw std::invalid_argument("spec: partition blocks must cover exactly the free variables");

    if (!spec.linear.empty() && static_cast<int>(spec.linear.size()) != spec.n)
        throw std::invalid_argument("spec: linear coefficient vector must have length n");
    if (spec.extra_quadratic) {
        if (spec.extra_quadratic->modulus() != spec.p)
            throw std::invalid_argument("spec: extra_quadratic modulus mismatch");
        if (spec.extra_quadratic->num_vars() != spec.n)
            throw std::invalid_argument("spec: extra_quadratic variable count mismatch");
    }
}

// The restricted function must be (path quadratic) + affine, nothing else.
void check_restricted_shape(const CccSpec& spec, const Poly& assembled) {
    Poly restricted = assembled.restricted(spec.J, spec.c);
    Poly path = path_poly(spec.p, spec.n, spec.partition);
    Poly residue = restricted - restricted.affine_part() - path;
    if (!residue.is_zero()) {
        const auto& [exps, coeff] = *residue.terms().begin();
        throw std::invalid_argument(
            "spec: restriction leaves a non-path term " + Poly::term_to_string(exps, coeff) +
            " (restricted function is " + restricted.to_string() + ")");
    }
}

}  // namespace

Poly path_poly(int p, int num_vars, const PathPartition& partition) {
    Poly out(p, num_vars);
    for (const auto& blk : partition.blocks)
        for (std::size_t a = 0; a + 1 < blk.size(); ++a)
            out = out + Poly::product_of_vars(p, num_vars, {blk[a], blk[a + 1]});
    return out;
}

Poly assemble_base_poly(const CccSpec& spec) {
    Poly f = path_poly(spec.p, spec.n, spec.partition);
    if (spec.extra_quadratic) f = f + *spec.extra_quadratic;
    std::vector<int> lin = spec.linear;
    lin.resize(spec.n, 0);
    f = f + Poly::linear_form(spec.p, lin, spec.constant);
    return f;
}

void validate_ccc_spec(const CccSpec& spec) {
    check_common(spec);
    check_restricted_shape(spec, assemble_base_poly(spec));
}

void validate_zcz_spec(const ZczSpec& spec) {
    check_common(spec.base);
    check_restricted_shape(spec.base, assemble_base_poly(spec.base));
    const int t = spec.base.t();
    if (static_cast<int>(spec.g.c.size()) != t)
        throw std::invalid_argument("spec: g.c must list c_2..c_{t+1} (length t)");
    if (spec.g.c.back() % spec.base.p == 0)
        throw std::invalid_argument("spec: c_{t+1} must be nonzero in Z_p");
    for (const auto& [mu, nu, coeff] : spec.g.d) {
        (void)coeff;
        if (!(2 <= mu && mu < nu && nu <= t))
            throw std::invalid_argument("spec: g.d term (" + std::to_string(mu) + "," +
                                        std::to_string(nu) + ") outside 2<=mu<nu<=t");
    }
    if (!spec.g.e.empty() && static_cast<int>(spec.g.e.size()) != t + 1)
        throw std::invalid_argument("spec: g.e must have length t+1");
}

std::vector<std::size_t> declared_support(int p, const std::vector<int>& J,
                                          const std::vector<int>& c, int total_vars) {
    std::size_t base = 0;
    std::vector<std::size_t> weights;  // p^{a-1} for free variables a
    {
        std::size_t w = 1;
        std::size_t ji = 0;
        for (int a = 1; a <= total_vars; ++a) {
            if (ji < J.size() && J[ji] == a) {
                base += static_cast<std::size_t>(c[ji]) * w;
                ++ji;
            } else {
                weights.push_back(w);
            }
            w *= static_cast<std::size_t>(p);
        }
    }
    std::vector<std::size_t> out;
    std::size_t count = 1;
    for (std::size_t i = 0; i < weights.size(); ++i) count *= static_cast<std::size_t>(p);
    out.reserve(count);
    std::vector<int> b(weights.size(), 0);
    for (std::size_t idx = 0; idx < count; ++idx) {
        std::size_t pos = base;
        for (std::size_t i = 0; i < weights.size(); ++i)
            pos += static_cast<std::size_t>(b[i]) * weights[i];
        out.push_back(pos);
        for (std::size_t i = 0; i < weights.size(); ++i) {
            if (++b[i] < p) break;
            b[i] = 0;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Rows over (h, s): psi((base + sum_r x_{first_r} s_r + sum_r x_{last_r} h_r)|_{x_J=c}).
std::vector<std::vector<SncSequence>> materialize_rows(
    const Poly& base, const CccSpec& spec, std::size_t size_cap) {
    const int p = spec.p;
    const int t = spec.t();
    const int m = base.num_vars();
    std::size_t count = 1;
    for (int r = 0; r < t; ++r) count *= static_cast<std::size_t>(p);

    std::vector<std::vector<SncSequence>> codes;
    codes.reserve(count);
    for (std::size_t h = 0; h < count; ++h) {
        std::vector<int> hd = digits_of(h, p, t);
        Poly with_h = base;
        for (int r = 0; r < t; ++r)
            with_h = with_h + Poly::product_of_vars(p, m, {spec.partition.blocks[r].back()}, hd[r]);
        std::vector<SncSequence> rows;
        rows.reserve(count);
        for (std::size_t s = 0; s < count; ++s) {
            std::vector<int> sd = digits_of(s, p, t);
            Poly q = with_h;
            for (int r = 0; r < t; ++r)
                q = q + Poly::product_of_vars(p, m, {spec.partition.blocks[r].front()}, sd[r]);
            rows.push_back(psi_restricted(q, spec.J, spec.c, size_cap));
        }
        codes.push_back(std::move(rows));
    }
    return codes;
}

}  // namespace

CodeSet build_ccc(const CccSpec& spec, std::size_t size_cap) {
    if (!spec.J.empty())
        throw std::invalid_argument("build_ccc: J must be empty (use build_snc_ccc)");
    validate_ccc_spec(spec);
    CodeSet out;
    out.p = spec.p;
    out.kind = SetKind::Ccc;
    out.codes = materialize_rows(assemble_base_poly(spec), spec, size_cap);
    out.meta = BuilderMeta{spec.n, spec.t(), spec.J, spec.c};
    return out;
}

CodeSet build_snc_ccc(const CccSpec& spec, std::size_t size_cap) {
    validate_ccc_spec(spec);
    CodeSet out;
    out.p = spec.p;
    out.kind = spec.J.empty() ? SetKind::Ccc : SetKind::SncCcc;
    out.codes = materialize_rows(assemble_base_poly(spec), spec, size_cap);
    out.meta = BuilderMeta{spec.n, spec.t(), spec.J, spec.c};
    return out;
}

ZczSet build_zcz(const ZczSpec& spec, std::size_t size_cap) {
    validate_zcz_spec(spec);
    const CccSpec& b = spec.base;
    const int p = b.p;
    const int t = b.t();
    const int m = b.n + t + 1;

    Poly q = assemble_base_poly(b).embedded(m);
    for (int r = 2; r <= t + 1; ++r)
        q = q + Poly::product_of_vars(p, m, {b.n + r, b.n + 1}, spec.g.c[r - 2]);
    for (const auto& [mu, nu, coeff] : spec.g.d)
        q = q + Poly::product_of_vars(p, m, {b.n + mu, b.n + nu}, coeff);
    for (std::size_t beta = 0; beta < spec.g.e.size(); ++beta)
        q = q + Poly::product_of_vars(p, m, {b.n + static_cast<int>(beta) + 1}, spec.g.e[beta]);
    q = q + Poly::constant(p, m, spec.g.e_prime);
    for (int r = 1; r <= t; ++r)
        q = q + Poly::product_of_vars(p, m, {b.partition.blocks[r - 1].front(), b.n + r});

    std::size_t count = 1;
    for (int r = 0; r < t; ++r) count *= static_cast<std::size_t>(p);
    ZczSet out;
    out.p = p;
    out.zone = static_cast<std::size_t>(p - 1);
    for (int i = 0; i < b.n; ++i) out.zone *= static_cast<std::size_t>(p);
    out.support = declared_support(p, b.J, b.c, m);
    out.meta = BuilderMeta{b.n, t, b.J, b.c};
    out.sequences.reserve(count);
    for (std::size_t h = 0; h < count; ++h) {
        std::vector<int> hd = digits_of(h, p, t);
        Poly zq = q;
        for (int r = 0; r < t; ++r)
            zq = zq + Poly::product_of_vars(p, m, {b.partition.blocks[r].back()}, hd[r]);
        out.sequences.push_back(psi_restricted(zq, b.J, b.c, size_cap));
    }
    return out;
}

CodeSet squeezed_dual(const CodeSet& set) {
    if (set.codes.empty() || set.codes[0].empty())
        throw std::invalid_argument("squeezed_dual: empty set");
    SupportSet common = support_of(set.codes[0][0]);
    for (const auto& code : set.codes)
        for (const auto& row : code)
            if (!(support_of(row) == common))
                throw std::invalid_argument("squeezed_dual: sequences have mixed supports");
    CodeSet out;
    out.p = set.p;
    out.kind = SetKind::Ccc;
    out.codes.reserve(set.codes.size());
    for (const auto& code : set.codes) {
        std::vector<SncSequence> rows;
        rows.reserve(code.size());
        for (const auto& row : code) rows.push_back(squeeze(row));
        out.codes.push_back(std::move(rows));
    }
    return out;
}

CccSpec relabeled_base_spec(const CccSpec& spec) {
    validate_ccc_spec(spec);
    std::vector<int> fv = free_vars(spec.n, spec.J);
    std::vector<int> new_index(spec.n, 0);  // 0 = variable disappears
    for (std::size_t r = 0; r < fv.size(); ++r) new_index[fv[r] - 1] = static_cast<int>(r) + 1;

    const int nk = spec.n - spec.k();
    Poly restricted = assemble_base_poly(spec).restricted(spec.J, spec.c);
    Poly affine = restricted.affine_part().relabeled(nk, new_index);

    CccSpec out;
    out.p = spec.p;
    out.n = nk;
    for (const auto& blk : spec.partition.blocks) {
        std::vector<int> nb;
        nb.reserve(blk.size());
        for (int v : blk) nb.push_back(new_index[v - 1]);
        out.partition.blocks.push_back(std::move(nb));
    }
    out.linear.assign(nk, 0);
    for (const auto& [exps, coeff] : affine.terms()) {
        int deg = 0, var = 0;
        for (int i = 0; i < nk; ++i)
            if (exps[i] != 0) { deg += exps[i]; var = i; }
        if (deg == 0) out.constant = coeff;
        else out.linear[var] = coeff;
    }
    return out;
}

}  // namespace zczkit
