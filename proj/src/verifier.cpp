#include "zczkit/verifier.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace zczkit {

namespace {

// Symbols packed to uint8 with p standing for null.
std::vector<std::uint8_t> pack_symbols(const SncSequence& s) {
    std::vector<std::uint8_t> out(s.length());
    for (std::size_t i = 0; i < s.length(); ++i)
        out[i] = s.is_null(i) ? static_cast<std::uint8_t>(s.modulus())
                              : static_cast<std::uint8_t>(s.symbol(i));
    return out;
}

// (p+1)^2 table: difference class (va - vb) mod p, or the discard slot p when
// either side is null.
std::vector<std::uint8_t> diff_table(int p) {
    std::vector<std::uint8_t> t((p + 1) * (p + 1), static_cast<std::uint8_t>(p));
    for (int va = 0; va < p; ++va)
        for (int vb = 0; vb < p; ++vb)
            t[va * (p + 1) + vb] = static_cast<std::uint8_t>((va - vb + p) % p);
    return t;
}

constexpr int kLaneBits = 12;
constexpr std::uint64_t kLaneMask = (1u << kLaneBits) - 1;

bool packable(int p, std::size_t L) {
    return p * kLaneBits <= 60 && L <= kLaneMask;
}

// Difference histogram of one row pair over every diagonal u = j - i, added
// into counts[(u + L - 1) * (p + 1) + d].  Lane-packed accumulators hold one
// row's worth of counts (<= L per diagonal), flushed per call.
void row_pair_histogram_packed(const std::uint8_t* a, const std::uint8_t* b,
                               std::size_t L, int p, const std::uint64_t* lane_lut,
                               std::uint64_t* lanes, long long* counts) {
    std::fill(lanes, lanes + 2 * L - 1, 0);
    for (std::size_t i = 0; i < L; ++i) {
        if (a[i] == p) continue;
        const std::uint64_t* lrow = lane_lut + a[i] * (p + 1);
        std::uint64_t* base = lanes + (L - 1 - i);
        for (std::size_t j = 0; j < L; ++j) base[j] += lrow[b[j]];
    }
    for (std::size_t r = 0; r < 2 * L - 1; ++r) {
        std::uint64_t v = lanes[r];
        long long* row = counts + r * (p + 1);
        for (int d = 0; d < p; ++d) row[d] += static_cast<long long>((v >> (kLaneBits * d)) & kLaneMask);
    }
}

void row_pair_histogram_plain(const std::uint8_t* a, const std::uint8_t* b,
                              std::size_t L, int p, const std::uint8_t* dtab,
                              long long* counts) {
    for (std::size_t i = 0; i < L; ++i) {
        if (a[i] == p) continue;
        const std::uint8_t* drow = dtab + a[i] * (p + 1);
        long long* base = counts + (L - 1 - i) * (p + 1);
        for (std::size_t j = 0; j < L; ++j) ++base[j * (p + 1) + drow[b[j]]];
    }
}

bool uniform(const long long* row, int p) {
    for (int d = 1; d < p; ++d)
        if (row[d] != row[0]) return false;
    return true;
}

}  // namespace

VerificationReport verify_mogcs(const CodeSet& set) {
    VerificationReport rep;
    rep.property = "ccc";
    if (set.codes.empty() || set.codes[0].empty())
        throw std::invalid_argument("verify_mogcs: empty set");
    const std::size_t K = set.K(), M = set.M(), L = set.L();
    const int p = set.p;
    for (const auto& code : set.codes) {
        if (code.size() != M) throw std::invalid_argument("verify_mogcs: ragged code set");
        for (const auto& row : code) {
            if (row.length() != L) throw std::invalid_argument("verify_mogcs: ragged sequence lengths");
            if (row.modulus() != p) throw std::invalid_argument("verify_mogcs: modulus mismatch");
        }
    }
    rep.K = K;
    rep.M = M;
    rep.L = L;
    rep.is_ccc = (K == M);

    std::vector<std::vector<std::uint8_t>> packed(K);
    for (std::size_t mu = 0; mu < K; ++mu) {
        packed[mu].reserve(M * L);
        for (const auto& row : set.codes[mu]) {
            auto ps = pack_symbols(row);
            packed[mu].insert(packed[mu].end(), ps.begin(), ps.end());
        }
    }

    const bool fast = packable(p, L);
    std::vector<std::uint64_t> lane_lut;
    if (fast) {
        lane_lut.assign((p + 1) * (p + 1), 0);
        for (int va = 0; va < p; ++va)
            for (int vb = 0; vb < p; ++vb)
                lane_lut[va * (p + 1) + vb] = std::uint64_t{1}
                                              << (kLaneBits * ((va - vb + p) % p));
    }
    const auto dtab = diff_table(p);
    std::vector<std::uint64_t> lanes(2 * L - 1);
    std::vector<long long> counts((2 * L - 1) * (p + 1));

    for (std::size_t mu1 = 0; mu1 < K; ++mu1) {
        for (std::size_t mu2 = mu1; mu2 < K; ++mu2) {
            std::fill(counts.begin(), counts.end(), 0);
            for (std::size_t nu = 0; nu < M; ++nu) {
                const std::uint8_t* a = packed[mu1].data() + nu * L;
                const std::uint8_t* b = packed[mu2].data() + nu * L;
                if (fast)
                    row_pair_histogram_packed(a, b, L, p, lane_lut.data(), lanes.data(),
                                              counts.data());
                else
                    row_pair_histogram_plain(a, b, L, p, dtab.data(), counts.data());
            }
            for (long long u = -(static_cast<long long>(L) - 1);
                 u <= static_cast<long long>(L) - 1; ++u) {
                const long long* row = counts.data() + (u + L - 1) * (p + 1);
                if (mu1 == mu2 && u == 0) {
                    if (mu1 == 0) rep.peak = row[0] - row[1];
                    continue;
                }
                if (!uniform(row, p)) {
                    rep.witnesses.push_back({mu1, mu2, u});
                    if (mu1 != mu2) rep.witnesses.push_back({mu2, mu1, -u});
                }
            }
        }
    }
    std::sort(rep.witnesses.begin(), rep.witnesses.end());
    rep.pass = rep.witnesses.empty();
    return rep;
}

namespace {

// c[d] over one cyclic shift; the wrap is split so the inner loops stay tight.
void pccf_histogram(const std::uint8_t* a, const std::uint8_t* b, std::size_t L,
                    int p, std::size_t u, const std::uint8_t* dtab, long long* counts) {
    std::fill(counts, counts + p + 1, 0);
    for (std::size_t i = 0; i + u < L; ++i)
        ++counts[dtab[a[i] * (p + 1) + b[i + u]]];
    for (std::size_t i = L - u; i < L; ++i)
        ++counts[dtab[a[i] * (p + 1) + b[i + u - L]]];
}

}  // namespace

VerificationReport verify_zcz(const std::vector<SncSequence>& seqs, std::size_t Z_claimed) {
    VerificationReport rep;
    rep.property = "zcz";
    if (seqs.empty()) throw std::invalid_argument("verify_zcz: empty set");
    const std::size_t N = seqs.size(), L = seqs[0].length();
    const int p = seqs[0].modulus();
    for (const auto& s : seqs) {
        if (s.length() != L) throw std::invalid_argument("verify_zcz: ragged sequence lengths");
        if (s.modulus() != p) throw std::invalid_argument("verify_zcz: modulus mismatch");
    }
    rep.N = N;
    rep.L = L;
    rep.Z_claimed = static_cast<long long>(Z_claimed);
    rep.peak = static_cast<long long>(seqs[0].support_size());

    std::vector<std::vector<std::uint8_t>> packed(N);
    for (std::size_t i = 0; i < N; ++i) packed[i] = pack_symbols(seqs[i]);
    const auto dtab = diff_table(p);
    std::vector<long long> counts(p + 1);

    const std::size_t z_eff = std::min(Z_claimed, L - 1);
    bool measured = false;
    long long z_measured = static_cast<long long>(L) - 1;
    for (std::size_t u = 0; u < L; ++u) {
        bool violated_at_u = false;
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t j = 0; j < N; ++j) {
                if (u == 0 && i == j) continue;
                pccf_histogram(packed[i].data(), packed[j].data(), L, p, u, dtab.data(),
                               counts.data());
                if (!uniform(counts.data(), p)) {
                    violated_at_u = true;
                    if (u <= z_eff) {
                        rep.witnesses.push_back({i, j, static_cast<long long>(u)});
                        if (u > 0) rep.witnesses.push_back({j, i, -static_cast<long long>(u)});
                    }
                }
            }
        }
        if (violated_at_u && !measured) {
            z_measured = static_cast<long long>(u) - 1;
            measured = true;
        }
        if (measured && u >= z_eff) break;
    }
    rep.Z_measured = z_measured;
    if (Z_claimed > L - 1) {
        // shift L wraps to the in-phase peak, so the claim is unsatisfiable
        for (std::size_t i = 0; i < N; ++i)
            rep.witnesses.push_back({i, i, static_cast<long long>(L)});
    }
    std::sort(rep.witnesses.begin(), rep.witnesses.end());
    rep.pass = rep.witnesses.empty();
    return rep;
}

VerificationReport verify_zcz(const ZczSet& set, std::size_t Z_claimed) {
    return verify_zcz(set.sequences, Z_claimed);
}

VerificationReport verify_support(const std::vector<SncSequence>& seqs, int p,
                                  const std::vector<int>& J, const std::vector<int>& c,
                                  int total_vars) {
    VerificationReport rep;
    rep.property = "support";
    rep.N = seqs.size();
    const std::vector<std::size_t> declared = declared_support(p, J, c, total_vars);
    for (std::size_t idx = 0; idx < seqs.size(); ++idx) {
        const auto measured = support_of(seqs[idx]).indices;
        if (measured == declared) continue;
        // first index in exactly one of the two sets
        std::size_t pos = 0;
        std::size_t a = 0, b = 0;
        while (a < measured.size() && b < declared.size() && measured[a] == declared[b]) {
            ++a;
            ++b;
        }
        if (a < measured.size() && (b >= declared.size() || measured[a] < declared[b]))
            pos = measured[a];
        else if (b < declared.size())
            pos = declared[b];
        rep.witnesses.push_back({idx, pos, 0});
    }
    rep.pass = rep.witnesses.empty();
    if (!seqs.empty()) rep.peak = static_cast<long long>(seqs[0].support_size());
    return rep;
}

VerificationReport verify_support(const CodeSet& set, const std::vector<int>& J,
                                  const std::vector<int>& c, int total_vars) {
    std::vector<SncSequence> flat;
    for (const auto& code : set.codes) flat.insert(flat.end(), code.begin(), code.end());
    return verify_support(flat, set.p, J, c, total_vars);
}

VerificationReport verify_support(const CodeSet& set) {
    if (!set.meta) throw std::invalid_argument("verify_support: set carries no builder metadata");
    return verify_support(set, set.meta->J, set.meta->c, set.meta->n);
}

VerificationReport verify_support(const ZczSet& set) {
    if (!set.meta) throw std::invalid_argument("verify_support: set carries no builder metadata");
    return verify_support(set.sequences, set.p, set.meta->J, set.meta->c,
                          set.meta->n + set.meta->t + 1);
}

std::string to_string(BoundClass c) {
    switch (c) {
        case BoundClass::Optimal: return "optimal";
        case BoundClass::OptimalBinary: return "optimal-binary";
        case BoundClass::AsymptoticallyConsistent: return "asymptotically-consistent";
        case BoundClass::ViolatesBound: return "violates-bound";
    }
    return "?";
}

BoundVerdict check_bound(long long N, long long Z, long long L, int p) {
    if (N < 1 || Z < 0 || L < 1)
        throw std::invalid_argument("check_bound: N, L must be positive and Z >= 0");
    if (!is_prime(p)) throw std::invalid_argument("check_bound: p must be prime");
    BoundVerdict v;
    v.N = N;
    v.Z = Z;
    v.L = L;
    v.p = p;
    v.ratio = Rational(N * (Z + 1), L);
    const bool violates = N * (Z + 1) > L || (p == 2 && 2 * N * Z > L);
    if (violates)
        v.classification = BoundClass::ViolatesBound;
    else if (p == 2 && 2 * N * Z == L)
        v.classification = BoundClass::OptimalBinary;
    else if (N * (Z + 1) == L)
        v.classification = BoundClass::Optimal;
    else
        v.classification = BoundClass::AsymptoticallyConsistent;
    return v;
}

}  // namespace zczkit
