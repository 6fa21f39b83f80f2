// Acceptance suite: runs the twelve gate criteria end to end and prints one
// PASS/FAIL line per criterion (with notes on failures).  Exit status is the
// number of failed criteria, capped at 99.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "reference_strings.hpp"
#include "test_util.hpp"
#include "zczkit/grm.hpp"
#include "zczkit/json_io.hpp"
#include "zczkit/verifier.hpp"

using namespace zczkit;
using namespace zczkit::testutil;

namespace {

struct Criterion {
    int id;
    std::string name;
    bool pass = true;
    std::vector<std::string> notes;

    void fail(const std::string& note) {
        pass = false;
        notes.push_back(note);
    }
    void expect(bool ok, const std::string& note) {
        if (!ok) fail(note);
    }
};

void print(const Criterion& c) {
    std::printf("[%2d] %s  %s\n", c.id, c.pass ? "PASS" : "FAIL", c.name.c_str());
    for (const auto& n : c.notes) std::printf("       - %s\n", n.c_str());
    std::fflush(stdout);
}

long long ipow(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

// ---------------------------------------------------------------------------
// The demo constructions behind criteria 1-4, loaded through the spec schema.

const char* kCccSpecJson = R"({
  "p": 2, "n": 6, "J": [3], "c": [1],
  "blocks": [[1, 2], [5, 4, 6]],
  "linear": [0, 0, 0, 0, 0, 0], "constant": 0,
  "extra_quadratic": "x2*x3 + x3*x4"
})";

const char* kZczSpecJson = R"({
  "p": 2, "n": 3, "J": [1], "c": [1],
  "blocks": [[2], [3]],
  "linear": [1, 0, 1], "constant": 0,
  "extra_quadratic": "x1*x2 + x1*x3",
  "g": {"c": [1, 1], "d": [], "e": [0, 0, 0], "e_prime": 0}
})";

// ---------------------------------------------------------------------------
// Deterministic sweep matrix: p in {2,3,5}, n <= 4, k in {0,1}, t <= min(n-k,2),
// one representative spec per combination (ZCZ variant only when p^{n+t+1}
// stays within the length budget).

struct SweepCase {
    CccSpec ccc;
    std::optional<ZczSpec> zcz;
};

std::vector<SweepCase> sweep_matrix() {
    std::vector<SweepCase> out;
    for (int p : {2, 3, 5})
        for (int n = 1; n <= 4; ++n)
            for (int k = 0; k <= 1 && k < n; ++k)
                for (int t = 1; t <= std::min(n - k, 2); ++t) {
                    CccSpec spec;
                    spec.p = p;
                    spec.n = n;
                    if (k == 1) {
                        spec.J = {2};
                        spec.c = {1};
                    }
                    std::vector<int> fv;
                    for (int v = 1; v <= n; ++v)
                        if (k == 0 || v != 2) fv.push_back(v);
                    const int nf = static_cast<int>(fv.size());
                    std::vector<std::vector<int>> blocks;
                    if (t == 1) {
                        blocks = {fv};
                    } else {
                        const int head = nf - nf / 2;  // first block gets the remainder
                        blocks = {std::vector<int>(fv.begin(), fv.begin() + head),
                                  std::vector<int>(fv.begin() + head, fv.end())};
                        std::reverse(blocks[1].begin(), blocks[1].end());  // non-identity order
                    }
                    spec.partition.blocks = blocks;
                    spec.linear.resize(n);
                    for (int a = 1; a <= n; ++a) spec.linear[a - 1] = a % p;
                    spec.constant = 1 % p;
                    if (k == 1)
                        spec.extra_quadratic =
                            Poly::product_of_vars(p, n, {2, fv.front()});

                    SweepCase cs;
                    cs.ccc = spec;
                    if (ipow(p, n + t + 1) <= 3125) {
                        ZczSpec z;
                        z.base = spec;
                        z.g.c.assign(t, 1);
                        z.g.c.back() = p - 1;
                        z.g.e.resize(t + 1);
                        for (int b = 1; b <= t + 1; ++b) z.g.e[b - 1] = b % p;
                        z.g.e_prime = p - 1;
                        cs.zcz = z;
                    }
                    out.push_back(std::move(cs));
                }
    return out;
}

struct BuiltCase {
    SweepCase spec;
    CodeSet ccc_set;
    std::optional<ZczSet> zcz_set;
};

std::vector<int> symbol_table(const SncSequence& s) {
    std::vector<int> out(s.length());
    for (std::size_t i = 0; i < s.length(); ++i) out[i] = s.symbol(i);
    return out;
}

std::string case_label(const CccSpec& s) {
    std::ostringstream os;
    os << "p=" << s.p << " n=" << s.n << " k=" << s.k() << " t=" << s.t();
    return os.str();
}

}  // namespace

int main() {
    int failures = 0;
    auto finish = [&](Criterion& c) {
        print(c);
        if (!c.pass) ++failures;
    };

    // --- shared artifacts ---------------------------------------------------
    const CccSpec ccc_spec = ccc_spec_from_json(Json::parse(kCccSpecJson));
    const ZczSpec zcz_spec = zcz_spec_from_json(Json::parse(kZczSpecJson));
    const CodeSet demo_ccc = build_snc_ccc(ccc_spec);
    const ZczSet demo_zcz = build_zcz(zcz_spec);

    // --- 1: 16-row reference rendering, byte-exact ---------------------------
    {
        Criterion c{1, "demo SNC-CCC rendering matches the 16 published rows byte-exactly"};
        std::size_t idx = 0;
        for (const auto& code : demo_ccc.codes)
            for (const auto& row : code) {
                const std::string text = pm_text(row);
                if (text != testdata::kSncCcc64Rows[idx]) {
                    std::size_t col = 0;
                    while (col < text.size() &&
                           col < testdata::kSncCcc64Rows[idx].size() &&
                           text[col] == testdata::kSncCcc64Rows[idx][col])
                        ++col;
                    c.fail("row " + std::to_string(idx) + " diverges at character " +
                           std::to_string(col));
                }
                ++idx;
            }
        finish(c);
    }

    // --- 2: 4-row reference rendering, byte-exact ----------------------------
    {
        Criterion c{2, "demo SNC-ZCZ rendering matches the 4 published rows byte-exactly"};
        for (std::size_t h = 0; h < 4; ++h) {
            const std::string text = pm_text(demo_zcz.sequences[h]);
            const std::string_view ref = testdata::kSncZcz64Rows[h];
            if (text != ref) {
                std::size_t col = 0;
                while (col < text.size() && col < ref.size() && text[col] == ref[col]) ++col;
                c.fail("row " + std::to_string(h) + " diverges at character " +
                       std::to_string(col) + " (built vs published)");
            }
        }
        if (!c.pass)
            c.notes.push_back(
                "published rows are not generated by the published parameters: rows 0,2,3 "
                "interpolate to a g outside the allowed class and row 1 is not quadratic; "
                "the published set also violates its own zone (cross value 14 at shift 0, "
                "16 at shift 8) while the faithful build verifies cleanly");
        finish(c);
    }

    // --- 3: complementary verification of the 16-row set ---------------------
    {
        Criterion c{3, "demo SNC-CCC verifies: zero sidelobes everywhere, peak 128"};
        const VerificationReport rep = verify_mogcs(demo_ccc);
        c.expect(rep.pass, "verification reported witnesses");
        c.expect(rep.peak == 128, "peak " + std::to_string(rep.peak) + " != 128");
        c.expect(rep.is_ccc, "K != M");
        finish(c);
    }

    // --- 4: zone verification of the 4-row set -------------------------------
    {
        Criterion c{4, "demo SNC-ZCZ passes at Z=8 with peak 32 and fails at Z=9"};
        const VerificationReport rep8 = verify_zcz(demo_zcz, 8);
        c.expect(rep8.pass, "verification at Z=8 failed");
        c.expect(rep8.peak == 32, "peak " + std::to_string(rep8.peak) + " != 32");
        const VerificationReport rep9 = verify_zcz(demo_zcz, 9);
        c.expect(!rep9.pass && !rep9.witnesses.empty(),
                 "set does NOT fail at Z=9: all odd-shift periodic correlations vanish "
                 "identically on the odd-index support, so the true zone is " +
                     std::to_string(rep9.Z_measured) + " (first violation at shift " +
                     std::to_string(rep9.Z_measured + 1) + "); no faithful instance can fail at 9");
        finish(c);
    }

    // --- build the sweep matrix (shared by 5, 6, 7, 9, 11) -------------------
    std::vector<BuiltCase> matrix;
    for (const SweepCase& sc : sweep_matrix()) {
        BuiltCase bc{sc, build_snc_ccc(sc.ccc), std::nullopt};
        if (sc.zcz) bc.zcz_set = build_zcz(*sc.zcz);
        matrix.push_back(std::move(bc));
    }

    // --- 5: bound classification ---------------------------------------------
    {
        Criterion c{5, "bound verdicts: optimal-binary / ratio 57-81 / family ratio formula"};
        const BoundVerdict a = check_bound(4, 8, 64, 2);
        c.expect(a.classification == BoundClass::OptimalBinary,
                 "(4,8,64) p=2 classified " + to_string(a.classification));
        c.expect(2 * a.N * a.Z == a.L, "(4,8,64): 2NZ != L");
        const BoundVerdict b = check_bound(3, 18, 81, 3);
        c.expect(b.ratio.to_string() == "57/81", "(3,18,81) ratio " + b.ratio.to_string());
        c.expect(b.N * (b.Z + 1) <= b.L, "(3,18,81): N(Z+1) > L");
        c.expect(b.classification == BoundClass::AsymptoticallyConsistent,
                 "(3,18,81) classified " + to_string(b.classification));
        for (const BuiltCase& bc : matrix) {
            if (!bc.zcz_set) continue;
            const auto& set = *bc.zcz_set;
            const Rational ratio(static_cast<long long>(set.N()) *
                                     (static_cast<long long>(set.zone) + 1),
                                 static_cast<long long>(set.L()));
            const int p = bc.spec.ccc.p, n = bc.spec.ccc.n;
            const Rational family(ipow(p, n) * (p - 1) + 1, ipow(p, n + 1));
            if (!(ratio == family))
                c.fail(case_label(bc.spec.ccc) + ": ratio " + ratio.to_string() +
                       " != family value " + family.to_string());
            const BoundVerdict v = check_bound(set.N(), set.zone, set.L(), p);
            if (v.classification == BoundClass::ViolatesBound)
                c.fail(case_label(bc.spec.ccc) + ": built parameters violate the bound");
        }
        finish(c);
    }

    // --- 6: construction soundness sweep -------------------------------------
    {
        Criterion c{6, "sweep p in {2,3,5}, n<=4, t<=min(n,2), k<=1: builds verify exactly"};
        for (const BuiltCase& bc : matrix) {
            const std::string label = case_label(bc.spec.ccc);
            const VerificationReport ccc_rep = verify_mogcs(bc.ccc_set);
            if (!ccc_rep.pass)
                c.fail(label + ": complementary verification failed with " +
                       std::to_string(ccc_rep.witnesses.size()) + " witnesses");
            const VerificationReport sup =
                verify_support(bc.ccc_set, bc.spec.ccc.J, bc.spec.ccc.c, bc.spec.ccc.n);
            if (!sup.pass) c.fail(label + ": code-set support mismatch");
            if (bc.zcz_set) {
                const std::size_t zone = static_cast<std::size_t>(
                    (bc.spec.ccc.p - 1) * ipow(bc.spec.ccc.p, bc.spec.ccc.n));
                const VerificationReport zrep = verify_zcz(*bc.zcz_set, zone);
                if (!zrep.pass)
                    c.fail(label + ": zone verification failed at Z=" + std::to_string(zone));
                const VerificationReport zsup = verify_support(*bc.zcz_set);
                if (!zsup.pass) c.fail(label + ": zcz support mismatch");
            }
        }
        finish(c);
    }

    // --- 7: restriction-squeeze duality for the k=1 sweep ---------------------
    {
        Criterion c{7, "squeezing each restricted build equals the relabeled traditional build"};
        for (const BuiltCase& bc : matrix) {
            if (bc.spec.ccc.k() == 0) continue;
            const std::string label = case_label(bc.spec.ccc);
            const CodeSet squeezed = squeezed_dual(bc.ccc_set);
            const CccSpec relabeled = relabeled_base_spec(bc.spec.ccc);
            const CodeSet direct = build_ccc(relabeled);
            if (squeezed.K() != direct.K() || squeezed.M() != direct.M() ||
                squeezed.L() != direct.L()) {
                c.fail(label + ": shape mismatch after squeeze");
                continue;
            }
            const long long expect_len =
                ipow(bc.spec.ccc.p, bc.spec.ccc.n - bc.spec.ccc.k());
            if (static_cast<long long>(squeezed.L()) != expect_len)
                c.fail(label + ": squeezed length != p^(n-k)");
            bool equal = true, traditional = true;
            for (std::size_t mu = 0; mu < squeezed.K(); ++mu)
                for (std::size_t nu = 0; nu < squeezed.M(); ++nu) {
                    equal = equal && squeezed.codes[mu][nu] == direct.codes[mu][nu];
                    traditional = traditional && squeezed.codes[mu][nu].traditional();
                }
            if (!equal) c.fail(label + ": squeezed sequences differ from the relabeled build");
            if (!traditional) c.fail(label + ": squeezed set is not traditional");
            if (!verify_mogcs(squeezed).pass)
                c.fail(label + ": squeezed set is not complementary");
        }
        finish(c);
    }

    // --- 8: GRM minimum distance ----------------------------------------------
    {
        Criterion c{8, "GRM minimum distance: formula equals brute force (p=2 l<=7, p=3 l<=4)"};
        for (int l = 1; l <= 7; ++l) {
            const long long f = grm_min_distance_formula(2, l, 1);
            const long long bf = grm_min_distance_bruteforce(grm_generator(2, l, 1));
            if (f != bf)
                c.fail("p=2 l=" + std::to_string(l) + ": formula " + std::to_string(f) +
                       " vs brute " + std::to_string(bf));
        }
        for (int l = 1; l <= 4; ++l) {
            const long long f = grm_min_distance_formula(3, l, 1);
            const long long bf = grm_min_distance_bruteforce(grm_generator(3, l, 1));
            if (f != bf)
                c.fail("p=3 l=" + std::to_string(l) + ": formula " + std::to_string(f) +
                       " vs brute " + std::to_string(bf));
        }
        c.expect(grm_min_distance_formula(2, 6, 1) == 32, "GRM_2(6,1) formula != 32");
        finish(c);
    }

    // --- 9: coset membership and partition ------------------------------------
    {
        Criterion c{9, "every traditional build lies in its quadratic coset; cosets partition"};
        for (const BuiltCase& bc : matrix) {
            if (!bc.zcz_set || bc.spec.ccc.k() != 0) continue;
            const Poly Q = zcz_quadratic_form(*bc.spec.zcz).combined();
            for (const auto& z : bc.zcz_set->sequences)
                if (!coset_membership(symbol_table(z), Q).has_value()) {
                    c.fail(case_label(bc.spec.ccc) + ": a sequence falls outside its coset");
                    break;
                }
        }
        for (int n = 1; n <= 2; ++n) {
            const int p = 2, t = 1, nv = n + t + 1;
            ZczSpec base;
            base.base.p = p;
            base.base.n = n;
            std::vector<int> all(n);
            for (int i = 0; i < n; ++i) all[i] = i + 1;
            base.base.partition.blocks = {all};
            base.g.c = {1};
            const Poly Q = zcz_quadratic_form(base).combined();

            std::set<std::vector<int>> coset;
            for (int mask = 0; mask < (1 << (nv + 1)); ++mask) {
                std::vector<int> lin(nv);
                for (int j = 0; j < nv; ++j) lin[j] = (mask >> j) & 1;
                coset.insert(xi_sequence(Q + Poly::linear_form(p, lin, (mask >> nv) & 1)));
            }

            // vary every affine choice except the absorbed terminal-variable one
            std::set<std::set<std::vector<int>>> distinct;
            std::multiset<std::vector<int>> covered;
            const int free_linear = n - t;  // d on non-terminal free variables
            for (int dmask = 0; dmask < (1 << free_linear); ++dmask)
                for (int e1 = 0; e1 < 2; ++e1)
                    for (int e2 = 0; e2 < 2; ++e2)
                        for (int ep = 0; ep < 2; ++ep) {
                            ZczSpec spec = base;
                            spec.base.linear.assign(n, 0);
                            int bit = 0;
                            for (int v = 1; v <= n; ++v) {
                                if (v == all.back()) continue;  // absorbed by row terms
                                spec.base.linear[v - 1] = (dmask >> bit) & 1;
                                ++bit;
                            }
                            spec.g.e = {e1, e2};
                            spec.g.e_prime = ep;
                            const ZczSet set = build_zcz(spec);
                            std::set<std::vector<int>> frozen;
                            for (const auto& z : set.sequences) {
                                frozen.insert(symbol_table(z));
                                covered.insert(symbol_table(z));
                            }
                            distinct.insert(frozen);
                        }
            const long long expect = count_zcz_sets_in_coset(p, n, t);
            if (static_cast<long long>(distinct.size()) != expect)
                c.fail("p=2 n=" + std::to_string(n) + ": " + std::to_string(distinct.size()) +
                       " distinct sets, expected " + std::to_string(expect));
            if (covered.size() != coset.size())
                c.fail("p=2 n=" + std::to_string(n) + ": union covers " +
                       std::to_string(covered.size()) + " of " + std::to_string(coset.size()));
            for (const auto& w : coset)
                if (covered.count(w) != 1) {
                    c.fail("p=2 n=" + std::to_string(n) +
                           ": a coset codeword is not covered exactly once");
                    break;
                }
        }
        finish(c);
    }

    // --- 10: coset-representative counting ------------------------------------
    {
        Criterion c{10, "representative counting: formula vs enumeration; 1/2 anomaly surfaced"};
        for (int p : {2, 3})
            for (int n : {3, 4}) {
                const Rational f = count_coset_representatives(p, n, 1);
                const long long bf = count_coset_representatives_bruteforce(p, n, 1);
                if (!f.is_integer() || f.num / f.den != bf)
                    c.fail("p=" + std::to_string(p) + " n=" + std::to_string(n) + ": formula " +
                           f.to_string() + " vs enumeration " + std::to_string(bf));
            }
        c.expect(count_coset_representatives(2, 4, 1) == Rational(12, 1),
                 "p=2 n=4 t=1 formula != 12");
        const Rational anomaly = count_coset_representatives(2, 2, 2);
        c.expect(anomaly == Rational(1, 2) && !anomaly.is_integer(),
                 "p=2 n=2 t=2 did not report the fractional 1/2 value");
        if (c.pass)
            c.notes.push_back("p=2 n=2 t=2 reported as 1/2 (non-integer) vs enumeration " +
                              std::to_string(count_coset_representatives_bruteforce(2, 2, 2)));
        finish(c);
    }

    // --- 11: intra-set Hamming distance ----------------------------------------
    {
        Criterion c{11, "intra-set Hamming distance of traditional builds >= (p-1)p^(n'-1)"};
        for (const BuiltCase& bc : matrix) {
            if (!bc.zcz_set || bc.spec.ccc.k() != 0) continue;
            const int p = bc.spec.ccc.p;
            const int nv = bc.spec.ccc.n + bc.spec.ccc.t() + 1;
            const long long lower = (p - 1) * ipow(p, nv - 1);
            const auto& seqs = bc.zcz_set->sequences;
            for (std::size_t i = 0; i < seqs.size(); ++i)
                for (std::size_t j = i + 1; j < seqs.size(); ++j) {
                    long long dist = 0;
                    for (std::size_t x = 0; x < seqs[i].length(); ++x)
                        dist += seqs[i].symbol(x) != seqs[j].symbol(x);
                    if (dist < lower) {
                        c.fail(case_label(bc.spec.ccc) + ": distance " + std::to_string(dist) +
                               " < " + std::to_string(lower));
                    }
                }
        }
        finish(c);
    }

    // --- 12: periodic-from-aperiodic identity + symmetry on random pairs --------
    {
        Criterion c{12, "identity and conjugate symmetry on 1000 seeded pairs, exact and vs fp"};
        std::mt19937 rng(0);
        int checked = 0;
        for (int round = 0; round < 1000; ++round) {
            const int p = std::array{2, 3, 5}[round % 3];
            const std::size_t L = 2 + rng() % 127;
            const SncSequence a = random_snc(rng, p, L);
            const SncSequence b = random_snc(rng, p, L);
            const auto ca = to_complex(a), cb = to_complex(b);
            bool ok = true;
            for (long long u = 1; u < static_cast<long long>(L) && ok; ++u) {
                const CyclotomicValue per = pccf(a, b, u);
                const CyclotomicValue via =
                    accf(a, b, u) + accf(b, a, static_cast<long long>(L) - u).conjugated();
                ok = per.equals(via);
                ok = ok && std::abs(per.to_complex() - pccf_fp(ca, cb, u)) < 1e-9L;
            }
            for (long long u = 0; u < static_cast<long long>(L) && ok; ++u) {
                const CyclotomicValue fwd = accf(a, b, -u);
                const CyclotomicValue mirror = accf(b, a, u).conjugated();
                ok = fwd.equals(mirror);
                ok = ok && std::abs(fwd.to_complex() - accf_fp(ca, cb, -u)) < 1e-9L;
            }
            if (!ok) {
                c.fail("pair " + std::to_string(round) + " (p=" + std::to_string(p) +
                       ", L=" + std::to_string(L) + ") broke the identity");
                break;
            }
            ++checked;
        }
        if (c.pass && checked != 1000) c.fail("ran only " + std::to_string(checked) + " pairs");
        finish(c);
    }

    std::printf("%d of 12 criteria failed\n", failures);
    return failures > 99 ? 99 : failures;
}
