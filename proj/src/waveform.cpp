#include "zczkit/waveform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace zczkit {

CyclotomicValue::CyclotomicValue(int modulus) : p_(modulus), counts_(modulus, 0) {
    if (!is_prime(p_)) throw std::invalid_argument("CyclotomicValue: modulus must be prime");
}

CyclotomicValue CyclotomicValue::from_counts(int modulus, std::vector<long long> counts) {
    CyclotomicValue v(modulus);
    if (static_cast<int>(counts.size()) != modulus)
        throw std::invalid_argument("CyclotomicValue: counts length != modulus");
    v.counts_ = std::move(counts);
    return v;
}

void CyclotomicValue::add_root(int k, long long weight) {
    k %= p_;
    if (k < 0) k += p_;
    counts_[k] += weight;
}

CyclotomicValue CyclotomicValue::conjugated() const {
    CyclotomicValue out(p_);
    for (int k = 0; k < p_; ++k) out.counts_[(p_ - k) % p_] = counts_[k];
    return out;
}

CyclotomicValue CyclotomicValue::operator+(const CyclotomicValue& rhs) const {
    if (p_ != rhs.p_) throw std::invalid_argument("CyclotomicValue: modulus mismatch");
    CyclotomicValue out(p_);
    for (int k = 0; k < p_; ++k) out.counts_[k] = counts_[k] + rhs.counts_[k];
    return out;
}

bool CyclotomicValue::is_zero() const {
    for (int k = 1; k < p_; ++k)
        if (counts_[k] != counts_[0]) return false;
    return true;
}

bool CyclotomicValue::equals(const CyclotomicValue& rhs) const {
    if (p_ != rhs.p_) return false;
    long long d0 = counts_[0] - rhs.counts_[0];
    for (int k = 1; k < p_; ++k)
        if (counts_[k] - rhs.counts_[k] != d0) return false;
    return true;
}

std::optional<long long> CyclotomicValue::as_integer() const {
    for (int k = 2; k < p_; ++k)
        if (counts_[k] != counts_[1]) return std::nullopt;
    return counts_[0] - counts_[1];
}

std::complex<long double> CyclotomicValue::to_complex() const {
    std::complex<long double> acc{0, 0};
    for (int k = 0; k < p_; ++k) {
        long double ang = 2.0L * std::numbers::pi_v<long double> * k / p_;
        acc += static_cast<long double>(counts_[k]) *
               std::complex<long double>{std::cos(ang), std::sin(ang)};
    }
    return acc;
}

SncSequence::SncSequence(int modulus, std::vector<std::int16_t> symbols)
    : p_(modulus), symbols_(std::move(symbols)) {
    if (!is_prime(p_)) throw std::invalid_argument("SncSequence: modulus must be prime");
    bool any = false;
    for (std::int16_t s : symbols_) {
        if (s == kNull) continue;
        if (s < 0 || s >= p_)
            throw std::invalid_argument("SncSequence: symbol " + std::to_string(s) +
                                        " outside 0.." + std::to_string(p_ - 1));
        any = true;
    }
    if (!any) throw std::invalid_argument("SncSequence: support is empty");
}

bool SncSequence::traditional() const {
    return std::none_of(symbols_.begin(), symbols_.end(),
                        [](std::int16_t s) { return s < 0; });
}

std::size_t SncSequence::support_size() const {
    return static_cast<std::size_t>(std::count_if(
        symbols_.begin(), symbols_.end(), [](std::int16_t s) { return s >= 0; }));
}

std::vector<int> digits_of(std::size_t i, int p, int m) {
    std::vector<int> d(m);
    for (int k = 0; k < m; ++k) {
        d[k] = static_cast<int>(i % p);
        i /= p;
    }
    return d;
}

namespace {

std::size_t table_length(const Poly& f, std::size_t size_cap) {
    std::size_t len = 1;
    for (int k = 0; k < f.num_vars(); ++k) {
        if (len > size_cap / static_cast<std::size_t>(f.modulus()))
            throw std::invalid_argument(
                "materialization size p^m exceeds cap of " + std::to_string(size_cap) +
                " entries (p=" + std::to_string(f.modulus()) +
                ", m=" + std::to_string(f.num_vars()) + ")");
        len *= static_cast<std::size_t>(f.modulus());
    }
    if (len > size_cap)
        throw std::invalid_argument("materialization size p^m exceeds cap of " +
                                    std::to_string(size_cap) + " entries");
    return len;
}

}  // namespace

std::vector<int> xi_sequence(const Poly& f, std::size_t size_cap) {
    const std::size_t L = table_length(f, size_cap);
    const int p = f.modulus();
    const int m = f.num_vars();
    std::vector<int> out(L);
    std::vector<int> point(m, 0);
    for (std::size_t i = 0; i < L; ++i) {
        out[i] = f.eval(point);
        for (int k = 0; k < m; ++k) {  // odometer, digit 0 fastest
            if (++point[k] < p) break;
            point[k] = 0;
        }
    }
    return out;
}

SncSequence psi_sequence(const Poly& f, std::size_t size_cap) {
    return psi_restricted(f, {}, {}, size_cap);
}

SncSequence psi_restricted(const Poly& f, const std::vector<int>& J,
                           const std::vector<int>& c, std::size_t size_cap) {
    if (J.size() != c.size()) throw std::invalid_argument("psi_restricted: |J| != |c|");
    for (std::size_t a = 0; a < J.size(); ++a) {
        if (J[a] < 1 || J[a] > f.num_vars())
            throw std::invalid_argument("psi_restricted: index out of range");
        if (a > 0 && J[a] <= J[a - 1])
            throw std::invalid_argument("psi_restricted: J must be strictly increasing");
        if (c[a] < 0 || c[a] >= f.modulus())
            throw std::invalid_argument("psi_restricted: restriction value outside Z_p");
    }
    const std::size_t L = table_length(f, size_cap);
    const int p = f.modulus();
    const int m = f.num_vars();
    std::vector<std::int16_t> out(L, SncSequence::kNull);
    std::vector<int> point(m, 0);
    for (std::size_t i = 0; i < L; ++i) {
        bool on = true;
        for (std::size_t a = 0; a < J.size(); ++a)
            if (point[J[a] - 1] != c[a]) { on = false; break; }
        if (on) out[i] = static_cast<std::int16_t>(f.eval(point));
        for (int k = 0; k < m; ++k) {
            if (++point[k] < p) break;
            point[k] = 0;
        }
    }
    return SncSequence(p, std::move(out));
}

SncSequence squeeze(const SncSequence& s) {
    std::vector<std::int16_t> kept;
    kept.reserve(s.length());
    for (std::size_t i = 0; i < s.length(); ++i)
        if (!s.is_null(i)) kept.push_back(static_cast<std::int16_t>(s.symbol(i)));
    return SncSequence(s.modulus(), std::move(kept));
}

SupportSet support_of(const SncSequence& s) {
    SupportSet out;
    for (std::size_t i = 0; i < s.length(); ++i)
        if (!s.is_null(i)) out.indices.push_back(i);
    return out;
}

namespace {

void check_pair(const SncSequence& a, const SncSequence& b, long long u) {
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("correlation: modulus mismatch");
    if (a.length() != b.length())
        throw std::invalid_argument("correlation: length mismatch");
    long long L = static_cast<long long>(a.length());
    if (u <= -L || u >= L)
        throw std::invalid_argument("correlation: |shift| must be < length");
}

}  // namespace

CyclotomicValue accf(const SncSequence& a, const SncSequence& b, long long u) {
    check_pair(a, b, u);
    const long long L = static_cast<long long>(a.length());
    CyclotomicValue v(a.modulus());
    if (u >= 0) {
        for (long long i = 0; i + u < L; ++i) {
            int x = a.symbol(static_cast<std::size_t>(i));
            int y = b.symbol(static_cast<std::size_t>(i + u));
            if (x >= 0 && y >= 0) v.add_root(x - y);
        }
    } else {
        for (long long i = 0; i < L + u; ++i) {
            int x = a.symbol(static_cast<std::size_t>(i - u));
            int y = b.symbol(static_cast<std::size_t>(i));
            if (x >= 0 && y >= 0) v.add_root(x - y);
        }
    }
    return v;
}

CyclotomicValue pccf(const SncSequence& a, const SncSequence& b, long long u) {
    check_pair(a, b, u);
    const long long L = static_cast<long long>(a.length());
    CyclotomicValue v(a.modulus());
    if (u >= 0) {
        for (long long i = 0; i < L; ++i) {
            int x = a.symbol(static_cast<std::size_t>(i));
            int y = b.symbol(static_cast<std::size_t>((i + u) % L));
            if (x >= 0 && y >= 0) v.add_root(x - y);
        }
    } else {
        for (long long i = 0; i < L; ++i) {
            int x = a.symbol(static_cast<std::size_t>((i - u) % L));
            int y = b.symbol(static_cast<std::size_t>(i));
            if (x >= 0 && y >= 0) v.add_root(x - y);
        }
    }
    return v;
}

std::string pm_text(const SncSequence& s) {
    if (s.modulus() != 2)
        throw std::invalid_argument("pm_text: only defined for p = 2");
    std::string out;
    out.reserve(s.length() * 2);
    for (std::size_t i = 0; i < s.length(); ++i) {
        if (s.is_null(i)) out += '0';
        else out += (s.symbol(i) == 0) ? "1" : "-1";
    }
    return out;
}

SncSequence parse_pm_text(const std::string& text) {
    std::vector<std::int16_t> syms;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (ch == '0') syms.push_back(SncSequence::kNull);
        else if (ch == '1') syms.push_back(0);
        else if (ch == '-') {
            if (i + 1 >= text.size() || text[i + 1] != '1')
                throw std::invalid_argument("parse_pm_text: stray '-'");
            syms.push_back(1);
            ++i;
        } else {
            throw std::invalid_argument("parse_pm_text: unexpected character");
        }
    }
    return SncSequence(2, std::move(syms));
}

}  // namespace zczkit
