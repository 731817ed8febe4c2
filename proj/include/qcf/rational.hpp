#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <utility>

#include "qcf/errors.hpp"

namespace qcf {

// Arbitrary-precision rational, always in lowest terms with positive
// denominator. Thin invariant-enforcing wrapper over GMP's mpq_class.
class Rational {
public:
    // ---- constructors ----
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    Rational(long num, long den) {
        if (den == 0) throw ZeroDenominatorError("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    // Parses "p", "p/q", or a plain integer with optional sign.
    static Rational parse(const std::string& text);

    // ---- observers ----
    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    // Renders "p/q", or just "p" when the denominator is 1.
    std::string str() const { return v_.get_str(); }
    // Always renders "p/q", including unit denominators ("3/1").
    std::string str_num_den() const {
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }
    double to_double() const { return v_.get_d(); }

    // ---- arithmetic ----
    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZeroError("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.v_.get_str();
    }

private:
    mpq_class v_;
};

inline Rational Rational::parse(const std::string& text) {
    std::string s = text;
    if (!s.empty() && s.front() == '+') s.erase(0, 1);
    auto bad = [&] { throw ParseError("Rational: cannot parse \"" + text + "\""); };
    if (s.empty()) bad();
    std::size_t slash = s.find('/');
    std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
    std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
    auto digits_ok = [](const std::string& t, bool allow_sign) {
        if (t.empty()) return false;
        std::size_t i = (allow_sign && (t[0] == '-')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    if (!digits_ok(num, true) || !digits_ok(den, false)) bad();
    mpq_class v;
    if (v.set_str(num + "/" + den, 10) != 0) bad();
    if (v.get_den() == 0) throw ZeroDenominatorError("Rational: zero denominator in \"" + text + "\"");
    v.canonicalize();
    return Rational(std::move(v));
}

// ---- free functions ----
inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Rational inverse(const Rational& r) {
    if (r.is_zero()) throw DivisionByZeroError("Rational: inverse of zero");
    return Rational(1) / r;
}

// Integer power; negative exponents invert, 0^0 = 1.
inline Rational pow(const Rational& base, long e) {
    if (e < 0) return pow(inverse(base), -e);
    Rational acc(1), b = base;
    for (long n = e; n > 0; n >>= 1) {
        if (n & 1) acc *= b;
        if (n > 1) b *= b;
    }
    return acc;
}

}  // namespace qcf
