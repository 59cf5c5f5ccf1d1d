#ifndef NCCONN_RATIONAL_HPP
#define NCCONN_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ncconn {

/// Gaussian rational a + b*i with exact rational parts.
///
/// This is the coefficient field for everything in the engine. GMP's mpq
/// keeps both parts canonically reduced, so equality is plain comparison.
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long n) : re_(n), im_(0) {}
    GaussianRational(const mpq_class& re) : re_(re), im_(0) {}
    GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussianRational i() { return GaussianRational(mpq_class(0), mpq_class(1)); }

    /// Parse "p", "p/q" or "p/q i"-free forms; complex literals are handled by the
    /// expression parser, not here.
    static GaussianRational from_fraction(long num, long den) {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return GaussianRational(q);
    }

    const mpq_class& real() const { return re_; }
    const mpq_class& imag() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }

    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

    GaussianRational& operator+=(const GaussianRational& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        mpq_class re = re_ * o.re_ - im_ * o.im_;
        mpq_class im = re_ * o.im_ + im_ * o.re_;
        re_ = re;
        im_ = im;
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.is_zero()) throw std::domain_error("division by zero in Q(i)");
        mpq_class n = o.re_ * o.re_ + o.im_ * o.im_;
        mpq_class re = (re_ * o.re_ + im_ * o.im_) / n;
        mpq_class im = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = re;
        im_ = im;
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    /// Canonical form: "a", "bi", or "(a + bi)" / "(a - bi)".
    std::string str() const {
        std::ostringstream os;
        if (im_ == 0) {
            os << re_;
        } else if (re_ == 0) {
            os << im_ << "i";
        } else {
            mpq_class ai = abs(im_);
            os << "(" << re_ << (im_ < 0 ? " - " : " + ") << ai << "i)";
        }
        return os.str();
    }

private:
    mpq_class re_, im_;
};

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& g) { return os << g.str(); }

}  // namespace ncconn

#endif
