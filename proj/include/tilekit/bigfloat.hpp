#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "tilekit/rational.hpp"

namespace tilekit {

/**
 * Fixed-precision (192-bit) floating scalar for angle work. Rationals stay
 * exact everywhere else; this type only enters where values are genuinely
 * transcendental (arctangents, pi multiples).
 */
class BigFloat {
public:
    static constexpr mpfr_prec_t kPrecision = 192;

    BigFloat() { mpfr_init2(x_, kPrecision); mpfr_set_zero(x_, 1); }
    explicit BigFloat(const Rational& r) {
        mpfr_init2(x_, kPrecision);
        mpfr_set_q(x_, r.raw().get_mpq_t(), MPFR_RNDN);
    }
    explicit BigFloat(long n) { mpfr_init2(x_, kPrecision); mpfr_set_si(x_, n, MPFR_RNDN); }
    BigFloat(const BigFloat& o) { mpfr_init2(x_, kPrecision); mpfr_set(x_, o.x_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(x_, kPrecision);
        mpfr_swap(x_, o.x_);
    }
    BigFloat& operator=(BigFloat o) noexcept {
        mpfr_swap(x_, o.x_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(x_); }

    static BigFloat pi() {
        BigFloat r;
        mpfr_const_pi(r.x_, MPFR_RNDN);
        return r;
    }
    // atan2 over exact rational coordinates.
    static BigFloat atan2(const Rational& y, const Rational& x) {
        BigFloat fy(y), fx(x), r;
        mpfr_atan2(r.x_, fy.x_, fx.x_, MPFR_RNDN);
        return r;
    }

    BigFloat operator-() const {
        BigFloat r(*this);
        mpfr_neg(r.x_, r.x_, MPFR_RNDN);
        return r;
    }
    BigFloat& operator+=(const BigFloat& o) { mpfr_add(x_, x_, o.x_, MPFR_RNDN); return *this; }
    BigFloat& operator-=(const BigFloat& o) { mpfr_sub(x_, x_, o.x_, MPFR_RNDN); return *this; }
    BigFloat& operator*=(const BigFloat& o) { mpfr_mul(x_, x_, o.x_, MPFR_RNDN); return *this; }
    BigFloat& operator*=(long n) { mpfr_mul_si(x_, x_, n, MPFR_RNDN); return *this; }

    friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
    friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
    friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
    friend BigFloat operator*(BigFloat a, long n) { return a *= n; }
    friend BigFloat operator*(BigFloat a, const Rational& r) { return a *= BigFloat(r); }

    BigFloat abs() const {
        BigFloat r(*this);
        mpfr_abs(r.x_, r.x_, MPFR_RNDN);
        return r;
    }
    BigFloat tan() const {
        BigFloat r(*this);
        mpfr_tan(r.x_, r.x_, MPFR_RNDN);
        return r;
    }
    BigFloat sqrt() const {
        BigFloat r(*this);
        mpfr_sqrt(r.x_, r.x_, MPFR_RNDN);
        return r;
    }

    int cmp(const BigFloat& o) const { return mpfr_cmp(x_, o.x_); }
    int cmp(const Rational& r) const { return mpfr_cmp_q(x_, r.raw().get_mpq_t()); }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return a.cmp(b) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return a.cmp(b) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return a.cmp(b) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return a.cmp(b) >= 0; }

    // |*this| <= eps
    bool within(const Rational& eps) const { return abs().cmp(eps) <= 0; }

    // Dyadic approximation: nearest integer multiple of 2^-bits.
    Rational dyadic(int bits) const {
        BigFloat scaled(*this);
        mpfr_mul_2si(scaled.x_, scaled.x_, bits, MPFR_RNDN);
        mpz_class z;
        mpfr_get_z(z.get_mpz_t(), scaled.x_, MPFR_RNDN);
        mpq_class q(z, mpz_class(1) << bits);
        q.canonicalize();
        return Rational(q);
    }

    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

private:
    mpfr_t x_;
};

}  // namespace tilekit
