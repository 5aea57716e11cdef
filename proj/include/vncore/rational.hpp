#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace vncore {

/// Exact rational scalar over GMP. Always kept canonical: the denominator is
/// positive, gcd(|numerator|, denominator) = 1, and zero is 0/1. String form
/// is "p/q", or just "p" when the denominator is 1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}

    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    static Rational parse(const std::string& s) {
        if (s.empty()) throw std::invalid_argument("empty rational literal");
        std::size_t pos = 0;
        if (s[pos] == '-' || s[pos] == '+') ++pos;
        bool digits = false;
        for (; pos < s.size() && s[pos] != '/'; ++pos) {
            if (s[pos] < '0' || s[pos] > '9')
                throw std::invalid_argument("bad rational literal: " + s);
            digits = true;
        }
        if (!digits) throw std::invalid_argument("bad rational literal: " + s);
        if (pos < s.size()) {
            if (pos + 1 == s.size())
                throw std::invalid_argument("bad rational literal: " + s);
            for (std::size_t k = pos + 1; k < s.size(); ++k)
                if (s[k] < '0' || s[k] > '9')
                    throw std::invalid_argument("bad rational literal: " + s);
        }
        mpq_class q(s);
        if (q.get_den() == 0)
            throw std::domain_error("rational with zero denominator: " + s);
        q.canonicalize();
        return Rational(q, NoCanon{});
    }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    std::string str() const { return v_.get_str(); }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        return Rational(mpq_class(1) / v_, NoCanon{});
    }

    Rational operator-() const { return Rational(-v_, NoCanon{}); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) {
        return !(a == b);
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.v_ < b.v_;
    }

private:
    struct NoCanon {};
    // GMP arithmetic preserves canonical form, so results skip canonicalize().
    Rational(mpq_class q, NoCanon) : v_(std::move(q)) {}

    mpq_class v_;
};

}  // namespace vncore
