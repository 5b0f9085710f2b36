#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "ellmac/rational.hpp"

namespace ellmac {

struct ring_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Exponent vector aligned with the ring's variable list. */
using Mono = std::vector<std::uint32_t>;

inline long mono_degree(const Mono& m) {
    long d = 0;
    for (auto e : m) d += e;
    return d;
}

/* The ring descriptor: an ordered set of formal variables, a truncation
 * bound on total degree, and aliases mapping derived symbols to monomials
 * (e.g. p -> w*y1*...*y_{N-1}). */
struct VariableSet {
    std::vector<std::string> names;
    int degree = 0;
    std::map<std::string, Mono> aliases;

    std::size_t arity() const { return names.size(); }

    Mono unit() const { return Mono(names.size(), 0); }

    Mono alias(const std::string& name) const {
        auto it = aliases.find(name);
        if (it == aliases.end()) throw ring_error("unknown alias: " + name);
        return it->second;
    }

    bool operator==(const VariableSet& o) const {
        return names == o.names && degree == o.degree;
    }
};

using Ring = std::shared_ptr<const VariableSet>;

inline Ring make_ring(std::vector<std::string> names, int degree,
                      std::map<std::string, Mono> aliases = {}) {
    auto vs = std::make_shared<VariableSet>();
    vs->names = std::move(names);
    vs->degree = degree;
    vs->aliases = std::move(aliases);
    return vs;
}

inline Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

/* Truncated formal power series with exact rational coefficients.
 * Invariant: no stored zero coefficients, every monomial within the
 * truncation degree. */
class Series {
public:
    Series() = default;
    explicit Series(Ring ring) : ring_(std::move(ring)) {}

    static Series zero(Ring ring) { return Series(std::move(ring)); }

    static Series constant(Ring ring, const Rat& c) {
        Series s(std::move(ring));
        s.add_term(s.ring_->unit(), c);
        return s;
    }

    static Series one(Ring ring) { return constant(std::move(ring), Rat(1)); }

    static Series term(Ring ring, const Mono& m, const Rat& c) {
        Series s(std::move(ring));
        s.add_term(m, c);
        return s;
    }

    const Ring& ring() const { return ring_; }
    const std::map<Mono, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rat coeff(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    Rat constant_term() const { return coeff(ring_->unit()); }

    /* Accumulate c * x^m, dropping overweight monomials and zeros. */
    void add_term(const Mono& m, const Rat& c) {
        if (c == 0) return;
        if (m.size() != ring_->arity()) throw ring_error("monomial arity mismatch");
        if (mono_degree(m) > ring_->degree) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    bool operator==(const Series& o) const {
        return *ring_ == *o.ring_ && terms_ == o.terms_;
    }

private:
    Ring ring_;
    std::map<Mono, Rat> terms_;

    friend Series operator+(const Series&, const Series&);
    friend Series operator-(const Series&, const Series&);
    friend Series operator*(const Series&, const Series&);
};

inline void check_same_ring(const Series& a, const Series& b) {
    if (!(*a.ring() == *b.ring())) throw ring_error("ring mismatch");
}

inline Series operator+(const Series& a, const Series& b) {
    check_same_ring(a, b);
    Series r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

inline Series operator-(const Series& a, const Series& b) {
    check_same_ring(a, b);
    Series r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
}

inline Series operator*(const Series& a, const Series& b) {
    check_same_ring(a, b);
    Series r(a.ring());
    const long D = a.ring()->degree;
    for (const auto& [ma, ca] : a.terms_) {
        long da = mono_degree(ma);
        for (const auto& [mb, cb] : b.terms_) {
            if (da + mono_degree(mb) > D) continue;
            r.add_term(mono_mul(ma, mb), ca * cb);
        }
    }
    return r;
}

inline Series scale(const Series& a, const Rat& c) {
    Series r(a.ring());
    if (c == 0) return r;
    for (const auto& [m, co] : a.terms()) r.add_term(m, co * c);
    return r;
}

/* Multiplicative inverse of a unit (nonzero constant term), exact up to
 * the ring truncation: writes a = a0 (1 - r) with r of positive order and
 * sums the geometric series. */
inline Series invert_unit(const Series& a) {
    Rat a0 = a.constant_term();
    if (a0 == 0) throw ring_error("non-unit: zero constant term");
    Series r = Series::one(a.ring()) - scale(a, Rat(1) / a0);
    Series acc = Series::one(a.ring());
    Series pw = Series::one(a.ring());
    for (int k = 1; k <= a.ring()->degree; ++k) {
        pw = pw * r;
        if (pw.is_zero()) break;
        acc = acc + pw;
    }
    return scale(acc, Rat(1) / a0);
}

/* exp of a series with zero constant term. */
inline Series exp_series(const Series& a) {
    if (a.constant_term() != 0) throw ring_error("exp_series: nonzero constant term");
    Series acc = Series::one(a.ring());
    Series pw = Series::one(a.ring());
    Rat kfact(1);
    for (int k = 1; k <= a.ring()->degree; ++k) {
        pw = pw * a;
        if (pw.is_zero()) break;
        kfact *= k;
        acc = acc + scale(pw, Rat(1) / kfact);
    }
    return acc;
}

/* A scalar times a Laurent monomial, produced when a linear factor
 * (1 - c L) with L of negative exponent is normalized to have a unit
 * constant term.  Prefixes must cancel to the zero exponent vector before
 * a series is finalized. */
struct LaurentPrefix {
    Rat scalar{1};
    std::vector<long> expo;  // possibly negative

    static LaurentPrefix trivial(std::size_t arity) {
        return LaurentPrefix{Rat(1), std::vector<long>(arity, 0)};
    }
};

/* Expands (1 - c L)^{power} where L is a signed-exponent monomial.
 *
 * Nonnegative L: the prefix is trivial and the series is the expansion
 * itself.  L with a negative exponent: factor out (-c L)^{power} so the
 * residual series 1 - L^{-1}/c lives in the cone. */
inline std::pair<LaurentPrefix, Series> expand_linear_factor(const Ring& ring, const Rat& c,
                                                             const std::vector<long>& L,
                                                             int power) {
    if (L.size() != ring->arity()) throw ring_error("monomial arity mismatch");
    bool has_negative = false, all_nonpositive = true;
    for (long e : L) {
        if (e < 0) has_negative = true;
        if (e > 0) all_nonpositive = false;
    }
    if (!has_negative) {
        Mono m(L.begin(), L.end());
        Series lin = Series::one(ring);
        lin.add_term(m, -c);
        Series s = (power == 1) ? lin : invert_unit(lin);
        return {LaurentPrefix::trivial(ring->arity()), s};
    }
    if (c == 0) throw ring_error("zero pivot: c = 0 with negative-exponent monomial");
    if (!all_nonpositive)
        throw ring_error("inadmissible monomial: mixed-sign exponents in linear factor");
    Mono inv(L.size());
    for (std::size_t i = 0; i < L.size(); ++i) inv[i] = static_cast<std::uint32_t>(-L[i]);
    Series resid = Series::one(ring);
    resid.add_term(inv, -Rat(1) / c);
    LaurentPrefix pre;
    if (power == 1) {
        pre.scalar = -c;
        pre.expo = L;
        return {pre, resid};
    }
    pre.scalar = Rat(-1) / c;
    pre.expo.resize(L.size());
    for (std::size_t i = 0; i < L.size(); ++i) pre.expo[i] = -L[i];
    return {pre, invert_unit(resid)};
}

/* Collapses accumulated prefixes and series factors into one series.
 * The prefix exponents must cancel exactly; a nonzero residue signals a
 * misread convention upstream. */
inline Series finalize(const Ring& ring, const std::vector<LaurentPrefix>& prefixes,
                       const std::vector<Series>& factors) {
    std::vector<long> net(ring->arity(), 0);
    Rat scalar(1);
    for (const auto& p : prefixes) {
        if (p.expo.size() != ring->arity()) throw ring_error("monomial arity mismatch");
        for (std::size_t i = 0; i < net.size(); ++i) net[i] += p.expo[i];
        scalar *= p.scalar;
    }
    for (long e : net) {
        if (e != 0) {
            std::ostringstream os;
            os << "Laurent residue: net exponent vector (";
            for (std::size_t i = 0; i < net.size(); ++i) os << (i ? " " : "") << net[i];
            os << ")";
            throw ring_error(os.str());
        }
    }
    Series acc = Series::constant(ring, scalar);
    for (const Series& f : factors) acc = acc * f;
    return acc;
}

/* Canonical text form used by golden files: a header with the variable
 * names and truncation degree, then one line per term sorted by exponent
 * vector. */
inline std::string series_text(const Series& s) {
    std::ostringstream os;
    os << "vars";
    for (const auto& n : s.ring()->names) os << ' ' << n;
    os << " degree " << s.ring()->degree << '\n';
    for (const auto& [m, c] : s.terms()) {
        for (std::size_t i = 0; i < m.size(); ++i) os << (i ? " " : "") << m[i];
        if (m.empty()) os << "0";  // constant slot for a zero-variable ring
        os << " : " << rat_text(c) << '\n';
    }
    return os.str();
}

/* Keep only terms whose exponent of variable var is zero. */
inline Series slice_var_zero(const Series& s, std::size_t var) {
    Series r(s.ring());
    for (const auto& [m, c] : s.terms())
        if (m[var] == 0) r.add_term(m, c);
    return r;
}

}  // namespace ellmac
