#ifndef NCCONN_SCALAR_HPP
#define NCCONN_SCALAR_HPP

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "ncconn/rational.hpp"

namespace ncconn {

/// Laurent polynomial in the formal unit parameter q over Q(i).
///
/// The involution fixes conj(q) = q^{-1}, conj(i) = -i, which keeps |q| = 1
/// symbolically. Zero coefficients are never stored.
class Scalar {
public:
    using Terms = std::map<long, GaussianRational>;

    Scalar() = default;
    Scalar(long n) {
        if (n != 0) terms_[0] = GaussianRational(n);
    }
    Scalar(const GaussianRational& c) {
        if (!c.is_zero()) terms_[0] = c;
    }

    static Scalar q_power(long k, GaussianRational coeff = GaussianRational(1)) {
        Scalar s;
        if (!coeff.is_zero()) s.terms_[k] = std::move(coeff);
        return s;
    }
    static Scalar i() { return Scalar(GaussianRational::i()); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// True when supported on q^0 only (or zero).
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
    }

    GaussianRational constant_part() const {
        auto it = terms_.find(0);
        return it == terms_.end() ? GaussianRational() : it->second;
    }

    Scalar conj() const {
        Scalar r;
        for (const auto& [k, c] : terms_) r.terms_[-k] = c.conj();
        return r;
    }

    Scalar operator-() const {
        Scalar r;
        for (const auto& [k, c] : terms_) r.terms_[k] = -c;
        return r;
    }

    Scalar& operator+=(const Scalar& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        Scalar r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
        return r;
    }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    void add_term(long k, const GaussianRational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// Substitute a concrete value for q (used by the q = i matrix oracle and
    /// the q = 1 specialization).
    GaussianRational substitute_q(const GaussianRational& value) const {
        GaussianRational acc;
        for (const auto& [k, c] : terms_) {
            GaussianRational p(1);
            if (k >= 0) {
                for (long j = 0; j < k; ++j) p *= value;
            } else {
                GaussianRational inv = GaussianRational(1) / value;
                for (long j = 0; j < -k; ++j) p *= inv;
            }
            acc += c * p;
        }
        return acc;
    }

    /// q-degree bounds; undefined on zero (callers check is_zero first).
    long min_degree() const { return terms_.begin()->first; }
    long max_degree() const { return terms_.rbegin()->first; }

    /// Exact division: returns true and sets quotient iff o divides *this
    /// exactly in Q(i)[q, q^-1]. Laurent units q^k are always invertible.
    bool divide_exact(const Scalar& o, Scalar& quotient) const {
        if (o.is_zero()) return false;
        if (is_zero()) {
            quotient = Scalar();
            return true;
        }
        // Long division from the top degree. An exact quotient has its
        // exponents inside [min-min, max-max]; leaving that window means the
        // division is inexact.
        Scalar rem = *this;
        Scalar quot;
        const long dlead = o.max_degree();
        const long shift_lo = min_degree() - o.min_degree();
        const GaussianRational& dc = o.terms_.rbegin()->second;
        while (!rem.is_zero()) {
            long rlead = rem.max_degree();
            long shift = rlead - dlead;
            if (shift < shift_lo) return false;
            GaussianRational f = rem.terms_.rbegin()->second / dc;
            quot.add_term(shift, f);
            rem -= o * Scalar::q_power(shift, f);
            if (!rem.is_zero() && rem.max_degree() >= rlead) return false;  // no progress
        }
        quotient = quot;
        return true;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            if (k == 0) {
                os << c.str();
            } else {
                if (!(c == GaussianRational(1))) os << c.str() << "*";
                os << "q";
                if (k != 1) os << "^" << k;
            }
        }
        return os.str();
    }

private:
    Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace ncconn

#endif
