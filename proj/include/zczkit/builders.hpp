#pragma once

// Construction of the sequence families from validated parameter bundles:
// complementary code sets (traditional and spectrally-null-constrained) and
// ZCZ sequence sets, plus the squeeze/relabel correspondence between them.
//
// A CccSpec describes an n-variable function
//     f = [path quadratic over the partition blocks] + extra_quadratic
//         + sum_a d_a x_a + e'
// restricted on x_J = c.  The path quadratic of a block listing
// (pi(1), ..., pi(m_r)) is x_{pi(1)}x_{pi(2)} + ... + x_{pi(m_r-1)}x_{pi(m_r)}.
// After restriction the quadratic part must equal the path form exactly; any
// surviving non-path quadratic is rejected with the offending monomial named.

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "zczkit/field_poly.hpp"
#include "zczkit/waveform.hpp"

namespace zczkit {

// Block r lists pi_r(1), ..., pi_r(m_r) as original 1-based variable indices;
// the blocks must partition the free (non-restricted) variables exactly.
struct PathPartition {
    std::vector<std::vector<int>> blocks;
    int t() const { return static_cast<int>(blocks.size()); }
};

struct CccSpec {
    int p = 2;
    int n = 0;
    std::vector<int> J;   // restricted variable indices, strictly increasing
    std::vector<int> c;   // restriction values, |c| == |J|
    PathPartition partition;
    std::vector<int> linear;  // d_1..d_n (empty means all zero)
    int constant = 0;
    std::optional<Poly> extra_quadratic;  // over n vars; must restrict to affine

    int k() const { return static_cast<int>(J.size()); }
    int t() const { return partition.t(); }
};

// Appended-function coefficients for the ZCZ construction, on t+1 extra
// variables x_{n+1}..x_{n+t+1}:
//   sum_{r=2}^{t+1} c_r x_{n+r} x_{n+1} + sum_{2<=mu<nu<=t} d_{mu nu} x_{n+mu} x_{n+nu}
//   + sum_{b=1}^{t+1} e_b x_{n+b} + e',   with c_{t+1} != 0.
struct ZczGPart {
    std::vector<int> c;                      // c_2..c_{t+1}
    std::vector<std::array<int, 3>> d;       // {mu, nu, coeff}
    std::vector<int> e;                      // e_1..e_{t+1} (empty means zero)
    int e_prime = 0;
};

struct ZczSpec {
    CccSpec base;
    ZczGPart g;
};

enum class SetKind { Ccc, SncCcc, Mogcs, Zcz };

// Construction parameters carried alongside generated sets so support checks
// and reports can run without re-supplying them.
struct BuilderMeta {
    int n = 0;
    int t = 0;
    std::vector<int> J;
    std::vector<int> c;
};

struct CodeSet {
    int p = 2;
    SetKind kind = SetKind::Mogcs;
    std::vector<std::vector<SncSequence>> codes;  // K codes of M rows each
    std::optional<BuilderMeta> meta;

    std::size_t K() const { return codes.size(); }
    std::size_t M() const { return codes.empty() ? 0 : codes[0].size(); }
    std::size_t L() const {
        return (codes.empty() || codes[0].empty()) ? 0 : codes[0][0].length();
    }
};

struct ZczSet {
    int p = 2;
    std::size_t zone = 0;                 // declared zero-correlation width
    std::vector<std::size_t> support;     // declared common support
    std::vector<SncSequence> sequences;
    std::optional<BuilderMeta> meta;

    std::size_t N() const { return sequences.size(); }
    std::size_t L() const { return sequences.empty() ? 0 : sequences[0].length(); }
};

// Throws std::invalid_argument with a monomial-level message on any violated
// hypothesis (bad partition, t out of range, non-path quadratic residue, ...).
void validate_ccc_spec(const CccSpec& spec);
void validate_zcz_spec(const ZczSpec& spec);

// f over the n base variables (path + extra + linear + constant).
Poly assemble_base_poly(const CccSpec& spec);
// Path quadratic alone, over num_vars variables.
Poly path_poly(int p, int num_vars, const PathPartition& partition);

// Indices {sum_i c_i p^{j_i - 1} + sum_{a not in J} b_a p^{a-1} : b_a in Z_p}.
std::vector<std::size_t> declared_support(int p, const std::vector<int>& J,
                                          const std::vector<int>& c, int total_vars);

// K = M = p^t codes of length p^n; requires J empty.  Code h, row s is the
// psi table of f + sum_r x_{pi_r(1)} s_r + sum_r x_{pi_r(m_r)} h_r, with h and
// s expanded to base-p digit vectors least-significant digit first.
CodeSet build_ccc(const CccSpec& spec, std::size_t size_cap = kDefaultSizeCap);

// Same family restricted on x_J = c; every sequence's support equals the
// declared support formula.
CodeSet build_snc_ccc(const CccSpec& spec, std::size_t size_cap = kDefaultSizeCap);

// p^t sequences of length p^{n+t+1} with declared zone (p-1)p^n.
ZczSet build_zcz(const ZczSpec& spec, std::size_t size_cap = kDefaultSizeCap);

// Squeeze every sequence of a common-support code set; the result of a
// restricted build is a traditional (p^t, p^t, p^{n-k}) set.
CodeSet squeezed_dual(const CodeSet& set);

// The spec with restriction folded in: free variables renumbered 1..n-k in
// increasing original order, restriction residue moved into linear/constant.
// build_ccc of the result equals squeezed_dual(build_snc_ccc(spec)) sequence
// by sequence.
CccSpec relabeled_base_spec(const CccSpec& spec);

}  // namespace zczkit
