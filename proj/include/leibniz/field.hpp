#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace leibniz {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

/** True when n is a perfect square; on success *root is the non-negative square root. */
inline bool int_is_square(const Int& n, Int* root = nullptr) {
    if (n < 0) return false;
    Int r = boost::multiprecision::sqrt(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

inline bool rat_is_square(const Rat& q, Rat* root = nullptr) {
    if (q < 0) return false;
    Int sn, sd;
    if (!int_is_square(rat_num(q), &sn) || !int_is_square(rat_den(q), &sd)) return false;
    if (root) *root = Rat(sn, sd);
    return true;
}

enum class FieldKind { rational, quadratic };

/**
 * Coefficient field: either Q or a real quadratic extension Q(sqrt(d))
 * with d >= 2 square-free.
 */
class Field {
public:
    static Field rational() { return Field(FieldKind::rational, 0); }

    static Field quadratic(unsigned d) {
        if (d < 2) throw std::invalid_argument("Field::quadratic: d must be >= 2");
        for (unsigned p = 2; p * p <= d; ++p)
            if (d % (p * p) == 0)
                throw std::invalid_argument("Field::quadratic: d must be square-free");
        return Field(FieldKind::quadratic, d);
    }

    FieldKind kind() const { return kind_; }
    unsigned d() const { return d_; }
    bool is_rational() const { return kind_ == FieldKind::rational; }

    friend bool operator==(const Field& x, const Field& y) {
        return x.kind_ == y.kind_ && x.d_ == y.d_;
    }
    friend bool operator!=(const Field& x, const Field& y) { return !(x == y); }

    std::string name() const {
        return is_rational() ? "Q" : "Q(sqrt(" + std::to_string(d_) + "))";
    }

private:
    Field(FieldKind kind, unsigned d) : kind_(kind), d_(d) {}
    FieldKind kind_;
    unsigned d_;
};

/**
 * Exact field element a + b*sqrt(d). Plain rationals are the normal form
 * with b = 0 and d = 0, so values migrate freely into any ambient field.
 */
class Scalar {
public:
    Scalar() : d_(0) {}
    Scalar(int a) : a_(a), d_(0) {}
    Scalar(const Int& a) : a_(a), d_(0) {}
    Scalar(const Rat& a) : a_(a), d_(0) {}

    Scalar(const Rat& a, const Rat& b, unsigned d) : a_(a), b_(b), d_(d) {
        if (b_ == 0) {
            d_ = 0;
        } else if (d_ < 2) {
            throw std::invalid_argument("Scalar: irrational part needs d >= 2");
        }
    }

    static Scalar sqrt_of(unsigned d) { return Scalar(Rat(0), Rat(1), d); }

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    unsigned d() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }
    bool is_one() const { return b_ == 0 && a_ == 1; }

    // Sign used for display and normalization: the sign of a, or of b when a = 0.
    // (Not the sign of the real value; only a deterministic convention.)
    bool lex_negative() const { return a_ != 0 ? a_ < 0 : b_ < 0; }

    friend bool operator==(const Scalar& x, const Scalar& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
    }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

    Scalar operator-() const { return make(-a_, -b_, d_); }

    friend Scalar operator+(const Scalar& x, const Scalar& y) {
        unsigned d = join(x, y);
        return make(x.a_ + y.a_, x.b_ + y.b_, d);
    }
    friend Scalar operator-(const Scalar& x, const Scalar& y) { return x + (-y); }

    friend Scalar operator*(const Scalar& x, const Scalar& y) {
        unsigned d = join(x, y);
        return make(x.a_ * y.a_ + Rat(d) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, d);
    }

    Scalar inverse() const {
        if (is_zero()) throw std::domain_error("Scalar::inverse: division by zero");
        if (is_rational()) return Scalar(Rat(1) / a_);
        Rat n = a_ * a_ - Rat(d_) * b_ * b_;
        return make(a_ / n, -b_ / n, d_);
    }

    friend Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }

    Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
    Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
    Scalar& operator*=(const Scalar& y) { return *this = *this * y; }
    Scalar& operator/=(const Scalar& y) { return *this = *this / y; }

    double to_double() const {
        double v = static_cast<double>(a_);
        if (b_ != 0) v += static_cast<double>(b_) * std::sqrt(static_cast<double>(d_));
        return v;
    }

private:
    struct tag {};
    Scalar(Rat a, Rat b, unsigned d, tag) : a_(std::move(a)), b_(std::move(b)), d_(b_ == 0 ? 0 : d) {}

    static Scalar make(Rat a, Rat b, unsigned d) { return Scalar(std::move(a), std::move(b), d, tag{}); }

    static unsigned join(const Scalar& x, const Scalar& y) {
        if (x.d_ == 0) return y.d_;
        if (y.d_ == 0 || y.d_ == x.d_) return x.d_;
        throw std::logic_error("Scalar: mixed quadratic extensions");
    }

    Rat a_, b_;
    unsigned d_;
};

/** True when s belongs to f (rational, or irrational part drawn from f's sqrt(d)). */
inline bool field_contains(const Field& f, const Scalar& s) {
    if (s.is_rational()) return true;
    return f.kind() == FieldKind::quadratic && f.d() == s.d();
}

/** Deterministic total order on scalars: lexicographic on (a, b). */
inline int scalar_cmp(const Scalar& x, const Scalar& y) {
    if (x.a() != y.a()) return x.a() < y.a() ? -1 : 1;
    if (x.b() != y.b()) return x.b() < y.b() ? -1 : 1;
    if (x.d() != y.d()) return x.d() < y.d() ? -1 : 1;
    return 0;
}

/**
 * Square test inside the ambient field f. For s = u + v*sqrt(d) a square root
 * p + q*sqrt(d) exists iff norm(s) = u^2 - d v^2 is a rational square w^2 and
 * one of (u +/- w)/2 is a rational square p^2 (then q = v / (2p)); rational s
 * may also be d times a rational square. Writes a root to *root on success.
 */
inline bool scalar_is_square(const Field& f, const Scalar& s, Scalar* root = nullptr) {
    if (!field_contains(f, s)) throw std::invalid_argument("scalar_is_square: element outside field");
    if (s.is_zero()) {
        if (root) *root = Scalar(0);
        return true;
    }
    if (f.is_rational()) {
        Rat r;
        if (!rat_is_square(s.a(), &r)) return false;
        if (root) *root = Scalar(r);
        return true;
    }
    unsigned d = f.d();
    if (s.is_rational()) {
        Rat r;
        if (rat_is_square(s.a(), &r)) {
            if (root) *root = Scalar(r);
            return true;
        }
        if (rat_is_square(s.a() / Rat(d), &r)) {
            if (root) *root = Scalar(Rat(0), r, d);
            return true;
        }
        return false;
    }
    Rat u = s.a(), v = s.b();
    Rat norm = u * u - Rat(d) * v * v;
    Rat w;
    if (!rat_is_square(norm, &w)) return false;
    for (int sign = 0; sign < 2; ++sign) {
        Rat cand = sign == 0 ? Rat((u + w) / 2) : Rat((u - w) / 2);
        Rat p;
        if (cand != 0 && rat_is_square(cand, &p)) {
            Rat q = v / (2 * p);
            Scalar r(p, q, d);
            if (r * r == s) {
                if (root) *root = r;
                return true;
            }
        }
    }
    return false;
}

} // namespace leibniz
