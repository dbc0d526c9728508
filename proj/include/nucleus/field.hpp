#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace nucleus {

// A scalar of the coefficient field: an exact rational when the
// characteristic is 0, otherwise a residue in F_p.  Every element carries
// its characteristic so that mixed-characteristic arithmetic is a detectable
// contract violation rather than silent nonsense.
class FieldElem {
public:
    FieldElem() : p_(0), q_(0), r_(0) {}

    static FieldElem rational(const mpq_class& v) {
        FieldElem e;
        e.p_ = 0;
        e.q_ = v;
        e.q_.canonicalize();
        return e;
    }
    static FieldElem rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw std::invalid_argument("FieldElem: zero denominator");
        // canonicalize before the value is ever copied: copying an mpq with
        // a negative, unreduced denominator is undefined in gmp
        mpq_class q(num, den);
        q.canonicalize();
        return rational(q);
    }
    static FieldElem mod_p(long long r, long long p) {
        check_prime_range(p);
        FieldElem e;
        e.p_ = p;
        e.r_ = ((r % p) + p) % p;
        return e;
    }
    static FieldElem from_integer(const mpz_class& z, long long p) {
        if (p == 0) return rational(mpq_class(z));
        check_prime_range(p);
        FieldElem e;
        e.p_ = p;
        e.r_ = mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p));
        return e;
    }
    static FieldElem from_integer(long long v, long long p) {
        return from_integer(mpz_class(static_cast<long>(v)), p);
    }
    static FieldElem zero(long long p) { return from_integer(0, p); }
    static FieldElem one(long long p) { return from_integer(1, p); }

    long long characteristic() const { return p_; }
    bool is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }
    bool is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

    const mpq_class& rational_value() const {
        require(p_ == 0, "not a rational");
        return q_;
    }
    long long residue() const {
        require(p_ > 0, "not a prime-field element");
        return r_;
    }

    FieldElem operator+(const FieldElem& o) const {
        match(o);
        if (p_ == 0) return rational(q_ + o.q_);
        return mod_p(fadd(r_, o.r_, p_), p_);
    }
    FieldElem operator-(const FieldElem& o) const {
        match(o);
        if (p_ == 0) return rational(q_ - o.q_);
        return mod_p(fadd(r_, p_ - o.r_, p_), p_);
    }
    FieldElem operator*(const FieldElem& o) const {
        match(o);
        if (p_ == 0) return rational(q_ * o.q_);
        return mod_p(fmul(r_, o.r_, p_), p_);
    }
    FieldElem operator/(const FieldElem& o) const { return *this * o.inverse(); }
    FieldElem operator-() const {
        if (p_ == 0) return rational(-q_);
        return mod_p(p_ - r_, p_);
    }

    FieldElem inverse() const {
        if (is_zero()) throw std::domain_error("FieldElem: inverse of zero");
        if (p_ == 0) return rational(1 / q_);
        return mod_p(inv_mod(r_, p_), p_);
    }

    FieldElem pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        FieldElem acc = one(p_), base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    bool operator==(const FieldElem& o) const {
        if (p_ != o.p_) return false;
        return p_ == 0 ? q_ == o.q_ : r_ == o.r_;
    }
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    std::string str() const {
        if (p_ == 0) return q_.get_str();
        return std::to_string(r_);
    }

    static long long inv_mod(long long a, long long p) {
        // extended Euclid; a in [1, p)
        long long t = 0, nt = 1, r = p, nr = a;
        while (nr != 0) {
            long long q = r / nr;
            long long tmp = t - q * nt;
            t = nt; nt = tmp;
            tmp = r - q * nr;
            r = nr; nr = tmp;
        }
        if (r != 1) throw std::domain_error("FieldElem: modulus not prime");
        return ((t % p) + p) % p;
    }

private:
    long long p_;   // 0 = characteristic zero
    mpq_class q_;   // used when p_ == 0
    long long r_;   // used when p_ > 0, in [0, p_)

    static void check_prime_range(long long p) {
        if (p < 2 || p > (1LL << 31))
            throw std::invalid_argument("FieldElem: characteristic out of range");
    }
    void match(const FieldElem& o) const {
        if (p_ != o.p_)
            throw std::invalid_argument("FieldElem: mixed characteristics");
    }
    static void require(bool c, const char* msg) {
        if (!c) throw std::logic_error(std::string("FieldElem: ") + msg);
    }
    static long long fadd(long long a, long long b, long long p) {
        long long s = a + b;
        return s >= p ? s - p : s;
    }
    static long long fmul(long long a, long long b, long long p) {
        return static_cast<long long>((static_cast<__int128>(a) * b) % p);
    }
};

/// True iff p is 0 or a prime (trial division; desk-scale inputs).
bool is_zero_or_prime(long long p);

}  // namespace nucleus
