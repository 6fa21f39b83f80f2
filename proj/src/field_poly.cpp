#include "zczkit/field_poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace zczkit {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace {

int mod_norm(long long v, int p) {
    long long r = v % p;
    if (r < 0) r += p;
    return static_cast<int>(r);
}

// x^p = x in Z_p, so exponents reduce to the range 0..p-1.
int cap_exponent(int e, int p) {
    if (e < 0) throw std::invalid_argument("Poly: negative exponent");
    if (e <= p - 1) return e;
    return (e - 1) % (p - 1) + 1;
}

int pow_mod(int base, int exp, int p) {
    int r = 1;
    base = mod_norm(base, p);
    for (int i = 0; i < exp; ++i) r = static_cast<int>(static_cast<long long>(r) * base % p);
    return r;
}

}  // namespace

Poly::Poly(int modulus, int num_vars) : p_(modulus), num_vars_(num_vars) {
    if (!is_prime(p_)) throw std::invalid_argument("Poly: modulus " + std::to_string(p_) + " is not prime");
    if (num_vars_ < 0) throw std::invalid_argument("Poly: negative variable count");
}

void Poly::add_term_capped(const Exponents& exps, int coeff) {
    if (static_cast<int>(exps.size()) != num_vars_)
        throw std::invalid_argument("Poly: exponent vector length != num_vars");
    Exponents capped(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i) capped[i] = cap_exponent(exps[i], p_);
    int c = mod_norm(coeff, p_);
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(capped), c);
    if (!inserted) {
        it->second = mod_norm(it->second + c, p_);
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::from_terms(int modulus, int num_vars,
                      const std::vector<std::pair<Exponents, int>>& terms) {
    Poly f(modulus, num_vars);
    for (const auto& [exps, coeff] : terms) f.add_term_capped(exps, coeff);
    return f;
}

Poly Poly::product_of_vars(int modulus, int num_vars, const std::vector<int>& vars, int coeff) {
    Exponents e(num_vars, 0);
    for (int v : vars) {
        if (v < 1 || v > num_vars)
            throw std::invalid_argument("Poly: variable index x" + std::to_string(v) + " out of range");
        ++e[v - 1];
    }
    return from_terms(modulus, num_vars, {{e, coeff}});
}

Poly Poly::linear_form(int modulus, const std::vector<int>& coeffs, int constant) {
    Poly f(modulus, static_cast<int>(coeffs.size()));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        Exponents e(coeffs.size(), 0);
        e[i] = 1;
        f.add_term_capped(e, coeffs[i]);
    }
    f.add_term_capped(Exponents(coeffs.size(), 0), constant);
    return f;
}

Poly Poly::constant(int modulus, int num_vars, int value) {
    Poly f(modulus, num_vars);
    f.add_term_capped(Exponents(num_vars, 0), value);
    return f;
}

int Poly::degree() const {
    int d = -1;
    for (const auto& [exps, c] : terms_) {
        int s = 0;
        for (int e : exps) s += e;
        d = std::max(d, s);
    }
    return d;
}

int Poly::eval(std::span<const int> point) const {
    if (static_cast<int>(point.size()) != num_vars_)
        throw std::invalid_argument("Poly::eval: point length " + std::to_string(point.size()) +
                                    " != num_vars " + std::to_string(num_vars_));
    long long acc = 0;
    for (const auto& [exps, coeff] : terms_) {
        long long v = coeff;
        for (int i = 0; i < num_vars_ && v != 0; ++i)
            if (exps[i] != 0) v = v * pow_mod(point[i], exps[i], p_) % p_;
        acc += v;
    }
    return mod_norm(acc, p_);
}

Poly Poly::restricted(const std::vector<int>& J, const std::vector<int>& c) const {
    if (J.size() != c.size())
        throw std::invalid_argument("Poly::restricted: |J| != |c|");
    for (std::size_t i = 0; i < J.size(); ++i) {
        if (J[i] < 1 || J[i] > num_vars_)
            throw std::invalid_argument("Poly::restricted: index " + std::to_string(J[i]) + " out of range");
        if (i > 0 && J[i] <= J[i - 1])
            throw std::invalid_argument("Poly::restricted: J must be strictly increasing");
    }
    Poly out(p_, num_vars_);
    for (const auto& [exps, coeff] : terms_) {
        Exponents e = exps;
        long long cf = coeff;
        for (std::size_t a = 0; a < J.size(); ++a) {
            int idx = J[a] - 1;
            if (e[idx] != 0) {
                cf = cf * pow_mod(c[a], e[idx], p_) % p_;
                e[idx] = 0;
            }
        }
        out.add_term_capped(e, static_cast<int>(cf));
    }
    return out;
}

Poly Poly::embedded(int new_num_vars) const {
    if (new_num_vars < num_vars_)
        throw std::invalid_argument("Poly::embedded: cannot shrink variable space");
    Poly out(p_, new_num_vars);
    for (const auto& [exps, coeff] : terms_) {
        Exponents e = exps;
        e.resize(new_num_vars, 0);
        out.add_term_capped(e, coeff);
    }
    return out;
}

Poly Poly::relabeled(int new_num_vars, const std::vector<int>& new_index_of_var) const {
    if (static_cast<int>(new_index_of_var.size()) != num_vars_)
        throw std::invalid_argument("Poly::relabeled: mapping length != num_vars");
    Poly out(p_, new_num_vars);
    for (const auto& [exps, coeff] : terms_) {
        Exponents e(new_num_vars, 0);
        for (int i = 0; i < num_vars_; ++i) {
            if (exps[i] == 0) continue;
            int ni = new_index_of_var[i];
            if (ni < 1 || ni > new_num_vars)
                throw std::invalid_argument("Poly::relabeled: variable x" + std::to_string(i + 1) +
                                            " occurs but has no target index");
            e[ni - 1] += exps[i];
        }
        out.add_term_capped(e, coeff);
    }
    return out;
}

Poly Poly::homogeneous_part(int deg) const {
    Poly out(p_, num_vars_);
    for (const auto& [exps, coeff] : terms_) {
        int s = 0;
        for (int e : exps) s += e;
        if (s == deg) out.add_term_capped(exps, coeff);
    }
    return out;
}

Poly Poly::affine_part() const {
    Poly out(p_, num_vars_);
    for (const auto& [exps, coeff] : terms_) {
        int s = 0;
        for (int e : exps) s += e;
        if (s <= 1) out.add_term_capped(exps, coeff);
    }
    return out;
}

Poly Poly::operator+(const Poly& rhs) const {
    if (p_ != rhs.p_)
        throw std::invalid_argument("Poly: modulus mismatch (" + std::to_string(p_) + " vs " +
                                    std::to_string(rhs.p_) + ")");
    if (num_vars_ != rhs.num_vars_)
        throw std::invalid_argument("Poly: variable count mismatch");
    Poly out = *this;
    for (const auto& [exps, coeff] : rhs.terms_) out.add_term_capped(exps, coeff);
    return out;
}

Poly Poly::operator-(const Poly& rhs) const { return *this + rhs.scaled(-1); }

Poly Poly::scaled(int k) const {
    Poly out(p_, num_vars_);
    for (const auto& [exps, coeff] : terms_) out.add_term_capped(exps, coeff * k);
    return out;
}

std::string Poly::term_to_string(const Exponents& exps, int coeff) {
    std::ostringstream os;
    bool has_vars = false;
    for (int e : exps)
        if (e != 0) has_vars = true;
    if (coeff != 1 || !has_vars) {
        os << coeff;
        if (has_vars) os << "*";
    }
    bool first = true;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        if (!first) os << "*";
        first = false;
        os << "x" << (i + 1);
        if (exps[i] > 1) os << "^" << exps[i];
    }
    return os.str();
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [exps, coeff] : terms_) {
        if (!out.empty()) out += " + ";
        out += term_to_string(exps, coeff);
    }
    return out;
}

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    long long integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("Poly::parse: expected integer at '" + s.substr(start) + "'");
        return std::stoll(s.substr(start, pos - start));
    }
};

}  // namespace

Poly Poly::parse(const std::string& text, int modulus, int num_vars) {
    Poly out(modulus, num_vars);
    Lexer lx{text};
    if (lx.eof()) return out;
    while (true) {
        // one term: factors joined by '*'
        long long coeff = 1;
        Exponents exps(num_vars, 0);
        bool saw_factor = false;
        while (true) {
            if (lx.peek() == 'x') {
                lx.accept('x');
                long long idx = lx.integer();
                if (idx < 1 || idx > num_vars)
                    throw std::invalid_argument("Poly::parse: variable index x" + std::to_string(idx) +
                                                " exceeds num_vars=" + std::to_string(num_vars));
                long long e = 1;
                if (lx.accept('^')) e = lx.integer();
                if (e < 1 || e > modulus - 1)
                    throw std::invalid_argument("Poly::parse: exponent " + std::to_string(e) +
                                                " outside 1.." + std::to_string(modulus - 1));
                exps[idx - 1] += static_cast<int>(e);
            } else if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
                coeff *= lx.integer();
            } else {
                throw std::invalid_argument("Poly::parse: unexpected character '" +
                                            std::string(1, lx.peek()) + "'");
            }
            saw_factor = true;
            if (!lx.accept('*')) break;
        }
        if (!saw_factor) throw std::invalid_argument("Poly::parse: empty term");
        for (int e : exps)
            if (e > modulus - 1)
                throw std::invalid_argument("Poly::parse: accumulated exponent exceeds modulus-1");
        out.add_term_capped(exps, static_cast<int>(coeff % modulus));
        if (lx.eof()) break;
        if (!lx.accept('+'))
            throw std::invalid_argument("Poly::parse: expected '+' between terms");
        if (lx.eof()) throw std::invalid_argument("Poly::parse: dangling '+'");
    }
    return out;
}

}  // namespace zczkit
