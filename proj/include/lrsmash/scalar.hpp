/*
   Copyright 2026 The lrsmash Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "lrsmash/errors.hpp"

namespace lrsmash {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Ground field of a computation: the rationals, or a prime field F_p.
/// Every scalar, map and bundle carries its field; mixing fields is an error.
struct Field {
    std::uint64_t modulus = 0;  // 0 means Q

    bool is_rational() const { return modulus == 0; }

    bool operator==(const Field&) const = default;

    static Field rationals() { return Field{0}; }

    /// F_p for prime p <= 2^31. Throws Error for composite or oversized p.
    static Field prime(std::uint64_t p) {
        if (p < 2 || p > (std::uint64_t{1} << 31))
            throw Error("field modulus out of range: " + std::to_string(p));
        if (!is_prime(p)) throw Error("field modulus is not prime: " + std::to_string(p));
        return Field{p};
    }

    static bool is_prime(std::uint64_t p) {
        if (p < 2) return false;
        if (p % 2 == 0) return p == 2;
        for (std::uint64_t d = 3; d * d <= p; d += 2)
            if (p % d == 0) return false;
        return true;
    }

    std::string name() const { return is_rational() ? "Q" : "F" + std::to_string(modulus); }
};

/// Exact element of the active ground field. Rationals are kept reduced with
/// positive denominator (cpp_rational canonical form); residues live in [0, p).
class Scalar {
   public:
    Scalar() = default;  // rational zero

    static Scalar zero(const Field& f) {
        Scalar s;
        s.p_ = f.modulus;
        return s;
    }

    static Scalar one(const Field& f) { return from_integer(f, 1); }

    static Scalar from_integer(const Field& f, long long n) {
        Scalar s;
        s.p_ = f.modulus;
        if (f.is_rational()) {
            s.q_ = Rational(n);
        } else {
            long long r = n % static_cast<long long>(f.modulus);
            if (r < 0) r += static_cast<long long>(f.modulus);
            s.r_ = static_cast<std::uint64_t>(r);
        }
        return s;
    }

    /// Exact fraction over Q. The two-argument cpp_rational constructor is
    /// avoided on purpose; division canonicalizes reliably.
    static Scalar rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw Error("rational with zero denominator");
        Scalar s;
        s.p_ = 0;
        s.q_ = Rational(num) / Rational(den);
        return s;
    }

    static Scalar residue(const Field& f, std::uint64_t r) {
        if (f.is_rational()) throw FieldMismatch("residue scalar requested over Q");
        Scalar s;
        s.p_ = f.modulus;
        s.r_ = r % f.modulus;
        return s;
    }

    Field field() const { return Field{p_}; }
    bool is_rational() const { return p_ == 0; }
    bool is_zero() const { return is_rational() ? q_.is_zero() : r_ == 0; }
    bool is_one() const { return is_rational() ? q_ == 1 : r_ == 1; }

    const Rational& rational_value() const {
        if (!is_rational()) throw FieldMismatch("not a rational scalar");
        return q_;
    }
    std::uint64_t residue_value() const {
        if (is_rational()) throw FieldMismatch("not a residue scalar");
        return r_;
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        a.require_same(b);
        Scalar s;
        s.p_ = a.p_;
        if (a.is_rational())
            s.q_ = a.q_ + b.q_;
        else
            s.r_ = (a.r_ + b.r_) % a.p_;
        return s;
    }

    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        a.require_same(b);
        Scalar s;
        s.p_ = a.p_;
        if (a.is_rational())
            s.q_ = a.q_ - b.q_;
        else
            s.r_ = (a.r_ + a.p_ - b.r_) % a.p_;
        return s;
    }

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        a.require_same(b);
        Scalar s;
        s.p_ = a.p_;
        if (a.is_rational())
            s.q_ = a.q_ * b.q_;
        else
            s.r_ = (a.r_ * b.r_) % a.p_;  // p <= 2^31, so no overflow in u64
        return s;
    }

    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

    Scalar operator-() const {
        Scalar s;
        s.p_ = p_;
        if (is_rational())
            s.q_ = -q_;
        else
            s.r_ = r_ == 0 ? 0 : p_ - r_;
        return s;
    }

    Scalar inverse() const {
        if (is_zero()) throw Error("division by zero");
        Scalar s;
        s.p_ = p_;
        if (is_rational())
            s.q_ = Rational(1) / q_;
        else
            s.r_ = mod_inverse(r_, p_);
        return s;
    }

    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    bool operator==(const Scalar& b) const {
        if (p_ != b.p_) return false;
        return is_rational() ? q_ == b.q_ : r_ == b.r_;
    }
    bool operator!=(const Scalar& b) const { return !(*this == b); }

    /// Reduce a rational scalar mod p. Rejects denominators divisible by p.
    Scalar to_field(const Field& f) const {
        if (f == field()) return *this;
        if (!is_rational() || f.is_rational())
            throw FieldMismatch("only Q -> F_p scalar reduction is supported");
        const BigInt num = numerator(q_);
        const BigInt den = denominator(q_);
        const BigInt p(f.modulus);
        BigInt dm = den % p;
        if (dm == 0)
            throw Error("denominator of " + to_string() + " vanishes mod " +
                        std::to_string(f.modulus));
        BigInt nm = num % p;
        if (nm < 0) nm += p;
        std::uint64_t n64 = nm.convert_to<std::uint64_t>();
        std::uint64_t d64 = dm.convert_to<std::uint64_t>();
        return Scalar::residue(f, (n64 * mod_inverse(d64, f.modulus)) % f.modulus);
    }

    std::string to_string() const {
        if (is_rational()) {
            const BigInt num = numerator(q_);
            const BigInt den = denominator(q_);
            if (den == 1) return num.str();
            return num.str() + "/" + den.str();
        }
        return std::to_string(r_);
    }

   private:
    void require_same(const Scalar& b) const {
        if (p_ != b.p_)
            throw FieldMismatch("scalar fields differ: " + field().name() + " vs " +
                                b.field().name());
    }

    static std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
        // extended Euclid on signed 64-bit; p < 2^31 keeps everything in range
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
        while (new_r != 0) {
            std::int64_t q = r / new_r;
            std::int64_t tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        if (r != 1) throw Error("element not invertible mod p");
        if (t < 0) t += static_cast<std::int64_t>(p);
        return static_cast<std::uint64_t>(t);
    }

    Rational q_;
    std::uint64_t r_ = 0;
    std::uint64_t p_ = 0;
};

}  // namespace lrsmash
