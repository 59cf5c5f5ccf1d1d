#ifndef NCCONN_FRACTION_HPP
#define NCCONN_FRACTION_HPP

#include <algorithm>
#include <array>
#include <iterator>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "ncconn/algebra.hpp"

namespace ncconn {

namespace detail {

/// Monic gcd of two q-Laurent polynomials over Q(i) (Euclid after shifting
/// out the Laurent part). gcd(0, 0) = 0.
inline Scalar q_gcd(Scalar a, Scalar b) {
    auto shift_to_zero = [](const Scalar& s) {
        if (s.is_zero()) return s;
        return s * Scalar::q_power(-s.min_degree());
    };
    a = shift_to_zero(a);
    b = shift_to_zero(b);
    while (!b.is_zero()) {
        // remainder of a by b in Q(i)[q]
        Scalar r = a;
        long db = b.max_degree();
        const GaussianRational lb = b.terms().rbegin()->second;
        while (!r.is_zero() && r.max_degree() >= db) {
            long sh = r.max_degree() - db;
            GaussianRational f = r.terms().rbegin()->second / lb;
            r -= b * Scalar::q_power(sh, f);
        }
        a = b;
        b = shift_to_zero(r);
    }
    if (a.is_zero()) return a;
    GaussianRational lead = a.terms().rbegin()->second;
    Scalar monic;
    for (const auto& [k, c] : a.terms()) monic.add_term(k, c / lead);
    return monic;
}

/// Exact division num / den in the torus algebra where den is central.
/// Returns false when the division does not come out exactly.
inline bool divide_exact_by_central(const AlgebraElement& num, const AlgebraElement& den,
                                    AlgebraElement& quotient) {
    if (den.is_zero()) return false;
    if (num.is_zero()) {
        quotient = AlgebraElement::zero(num.mode());
        return true;
    }
    if (num.mode() == QMode::formal) {
        // Central divisors are scalar multiples of the unit; divide every
        // coefficient as a q-polynomial.
        if (!den.is_scalar()) return false;
        Scalar d = den.scalar_part();
        AlgebraElement q(num.mode());
        for (const auto& [mn, c] : num.terms()) {
            Scalar piece;
            if (!c.divide_exact(d, piece)) return false;
            q.add_term(mn, piece);
        }
        quotient = q;
        return true;
    }
    // q = 1: commutative bivariate Laurent division by the leading monomial.
    auto lead = [](const AlgebraElement& a) { return std::prev(a.terms().end()); };
    auto bounds = [](const AlgebraElement& a) {
        long mn_m = a.terms().begin()->first.first, mx_m = mn_m;
        long mn_n = a.terms().begin()->first.second, mx_n = mn_n;
        for (const auto& [mn, c] : a.terms()) {
            mn_m = std::min(mn_m, mn.first);
            mx_m = std::max(mx_m, mn.first);
            mn_n = std::min(mn_n, mn.second);
            mx_n = std::max(mx_n, mn.second);
        }
        return std::array<long, 4>{mn_m, mx_m, mn_n, mx_n};
    };
    auto nb = bounds(num), db = bounds(den);
    const long qm_lo = nb[0] - db[0], qm_hi = nb[1] - db[1];
    const long qn_lo = nb[2] - db[2], qn_hi = nb[3] - db[3];
    AlgebraElement rem = num, quot(num.mode());
    auto dl = lead(den);
    while (!rem.is_zero()) {
        auto rl = lead(rem);
        long qm = rl->first.first - dl->first.first;
        long qn = rl->first.second - dl->first.second;
        if (qm < qm_lo || qm > qm_hi || qn < qn_lo || qn > qn_hi) return false;
        GaussianRational f = rl->second.constant_part() / dl->second.constant_part();
        AlgebraElement mono = AlgebraElement::monomial(num.mode(), qm, qn, Scalar(f));
        quot += mono;
        rem -= den * mono;
    }
    quotient = quot;
    return true;
}

}  // namespace detail

/// Element of the localization of the torus algebra at its nonzero central
/// elements: num / den with den central. Denominators commute with
/// everything, so the usual fraction arithmetic is valid verbatim in the
/// noncommutative algebra.
///
/// Equality is mathematical (cross-multiplication), so two representations
/// of the same element always compare equal.
class CentralFraction {
public:
    CentralFraction() : num_(QMode::formal), den_(AlgebraElement::one(QMode::formal)) {}
    CentralFraction(const AlgebraElement& a) : num_(a), den_(AlgebraElement::one(a.mode())) {}
    CentralFraction(AlgebraElement num, AlgebraElement den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("central fraction with zero denominator");
        if (!den_.is_central()) throw std::domain_error("fraction denominator must be central");
        normalize();
    }

    static CentralFraction zero(QMode mode) { return CentralFraction(AlgebraElement::zero(mode)); }
    static CentralFraction one(QMode mode) { return CentralFraction(AlgebraElement::one(mode)); }

    const AlgebraElement& num() const { return num_; }
    const AlgebraElement& den() const { return den_; }
    QMode mode() const { return num_.mode(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_central() const { return num_.is_central(); }

    /// The underlying algebra element; throws unless the denominator is 1.
    const AlgebraElement& as_algebra() const {
        if (!den_.is_one()) throw std::domain_error("fraction is not polynomial: " + str());
        return num_;
    }

    CentralFraction operator-() const { return CentralFraction(raw{}, -num_, den_); }

    friend CentralFraction operator+(const CentralFraction& a, const CentralFraction& b) {
        if (a.den_ == b.den_) return CentralFraction(a.num_ + b.num_, a.den_);
        return CentralFraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend CentralFraction operator-(const CentralFraction& a, const CentralFraction& b) {
        if (a.den_ == b.den_) return CentralFraction(a.num_ - b.num_, a.den_);
        return CentralFraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend CentralFraction operator*(const CentralFraction& a, const CentralFraction& b) {
        return CentralFraction(a.num_ * b.num_, a.den_ * b.den_);
    }
    CentralFraction& operator+=(const CentralFraction& o) { return *this = *this + o; }
    CentralFraction& operator-=(const CentralFraction& o) { return *this = *this - o; }
    CentralFraction& operator*=(const CentralFraction& o) { return *this = *this * o; }

    /// Multiplicative inverse; defined only for nonzero central fractions.
    CentralFraction inverse() const {
        if (num_.is_zero()) throw std::domain_error("inverting zero");
        if (!num_.is_central()) throw std::domain_error("inverse exists only for central elements");
        return CentralFraction(den_, num_);
    }

    friend CentralFraction operator/(const CentralFraction& a, const CentralFraction& b) {
        return a * b.inverse();
    }

    CentralFraction star() const { return CentralFraction(num_.star(), den_.star()); }

    /// Quotient rule; the denominator is central so this is two-sided.
    CentralFraction basic_derivation(int j) const {
        AlgebraElement dn = num_.basic_derivation(j);
        AlgebraElement dd = den_.basic_derivation(j);
        if (dd.is_zero()) return CentralFraction(dn, den_);
        return CentralFraction(dn * den_ - num_ * dd, den_ * den_);
    }

    friend bool operator==(const CentralFraction& a, const CentralFraction& b) {
        if (a.den_ == b.den_) return a.num_ == b.num_;
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const CentralFraction& a, const CentralFraction& b) { return !(a == b); }

    bool commutes_with(const AlgebraElement& p) const { return (num_ * p) == (p * num_); }

    std::string str() const {
        if (den_.is_one()) return num_.str();
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }

private:
    struct raw {};  // tag: skip normalization when invariants already hold
    CentralFraction(raw, AlgebraElement num, AlgebraElement den)
        : num_(std::move(num)), den_(std::move(den)) {}

    void normalize() {
        if (num_.is_zero()) {
            den_ = AlgebraElement::one(num_.mode());
            return;
        }
        if (den_.is_one()) return;
        AlgebraElement q(num_.mode());
        if (detail::divide_exact_by_central(num_, den_, q)) {
            num_ = q;
            den_ = AlgebraElement::one(num_.mode());
            return;
        }
        if (mode() == QMode::formal) {
            reduce_q_content();
        }
        make_denominator_canonical();
    }

    /// Strip the common Q(i)[q^+-] content of numerator and denominator.
    void reduce_q_content() {
        Scalar g = den_.scalar_part();
        for (const auto& [mn, c] : num_.terms()) {
            g = detail::q_gcd(g, c);
            if (!g.is_zero() && g.is_constant()) return;  // nothing to gain
        }
        Scalar qn, qd;
        if (!den_.scalar_part().divide_exact(g, qd)) return;
        AlgebraElement num2(num_.mode());
        for (const auto& [mn, c] : num_.terms()) {
            Scalar piece;
            if (!c.divide_exact(g, piece)) return;
            num2.add_term(mn, piece);
        }
        num_ = num2;
        den_ = AlgebraElement::constant(den_.mode(), qd);
        if (den_.is_one()) return;
    }

    /// Deterministic representative: shift the denominator's lex-leading
    /// monomial to exponent (0, 0) q^0 and scale its coefficient to 1.
    void make_denominator_canonical() {
        auto dl = std::prev(den_.terms().end());
        long m = dl->first.first, n = dl->first.second;
        const Scalar& lc = dl->second;
        long k = lc.is_zero() ? 0 : lc.max_degree();
        GaussianRational lead = lc.terms().rbegin()->second;
        AlgebraElement unit =
            AlgebraElement::monomial(den_.mode(), -m, -n, Scalar::q_power(-k, GaussianRational(1) / lead));
        // unit is invertible (monomial times unit scalar); central denominators
        // keep centrality under central-monomial scaling only at q = 1, so at
        // formal q the denominator is scalar and m = n = 0 anyway.
        num_ = num_ * unit;
        den_ = den_ * unit;
    }

    AlgebraElement num_, den_;
};

inline std::ostream& operator<<(std::ostream& os, const CentralFraction& f) { return os << f.str(); }

}  // namespace ncconn

#endif
