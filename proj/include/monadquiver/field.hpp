#pragma once

// Exact scalar arithmetic over Q or a prime field F_p. Every value is kept
// in canonical form: rationals in lowest terms with positive denominator,
// prime-field residues in [0, p). No floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mq {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

class Field {
public:
    enum class Kind { Rationals, PrimeField };

    static Field rationals() { return Field(Kind::Rationals, 0); }

    static Field prime(std::uint64_t p) {
        require(is_prime_u64(p), "Field::prime: characteristic must be prime, got " + std::to_string(p));
        return Field(Kind::PrimeField, p);
    }

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] bool is_rationals() const { return kind_ == Kind::Rationals; }
    [[nodiscard]] bool is_prime_field() const { return kind_ == Kind::PrimeField; }
    // 0 for Q
    [[nodiscard]] std::uint64_t characteristic() const { return p_; }

    bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const Field& o) const { return !(*this == o); }

    [[nodiscard]] std::string name() const {
        return is_rationals() ? "Q" : ("F_" + std::to_string(p_));
    }

private:
    Field(Kind k, std::uint64_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::uint64_t p_;
};

inline std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    unsigned __int128 acc = 1, base = b % p;
    while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint64_t>(acc);
}

inline std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    require(a % p != 0, "mod_inverse: zero is not invertible");
    // extended Euclid on (a, p)
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
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

class Scalar {
public:
    Scalar() : field_(Field::rationals()) {}

    static Scalar zero(const Field& f) { return Scalar(f); }

    static Scalar one(const Field& f) {
        Scalar s(f);
        if (f.is_rationals())
            s.rat_ = 1;
        else
            s.res_ = 1 % f.characteristic();
        return s;
    }

    static Scalar from_int(const Field& f, long long v) {
        Scalar s(f);
        if (f.is_rationals()) {
            s.rat_ = v;
        } else {
            const auto p = static_cast<std::int64_t>(f.characteristic());
            std::int64_t r = v % p;
            if (r < 0) r += p;
            s.res_ = static_cast<std::uint64_t>(r);
        }
        return s;
    }

    static Scalar from_rational(BigInt num, BigInt den) {
        require(den != 0, "Scalar: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        Scalar s(Field::rationals());
        s.rat_ = BigRat(num, den);  // canonicalizes to lowest terms
        return s;
    }

    static Scalar residue(const Field& f, std::uint64_t v) {
        require(f.is_prime_field(), "Scalar::residue: field is not prime");
        Scalar s(f);
        s.res_ = v % f.characteristic();
        return s;
    }

    [[nodiscard]] const Field& field() const { return field_; }
    [[nodiscard]] bool is_zero() const { return field_.is_rationals() ? rat_ == 0 : res_ == 0; }
    [[nodiscard]] bool is_one() const { return field_.is_rationals() ? rat_ == 1 : res_ == 1 % field_.characteristic(); }

    [[nodiscard]] const BigRat& rational_value() const {
        require(field_.is_rationals(), "Scalar: not a rational");
        return rat_;
    }
    [[nodiscard]] std::uint64_t residue_value() const {
        require(field_.is_prime_field(), "Scalar: not a prime-field residue");
        return res_;
    }

    Scalar operator+(const Scalar& o) const {
        check_same(o);
        Scalar s(field_);
        if (field_.is_rationals())
            s.rat_ = rat_ + o.rat_;
        else
            s.res_ = add_mod(res_, o.res_, field_.characteristic());
        return s;
    }

    Scalar operator-(const Scalar& o) const {
        check_same(o);
        Scalar s(field_);
        if (field_.is_rationals())
            s.rat_ = rat_ - o.rat_;
        else
            s.res_ = add_mod(res_, field_.characteristic() - o.res_, field_.characteristic());
        return s;
    }

    Scalar operator-() const {
        Scalar s(field_);
        if (field_.is_rationals())
            s.rat_ = -rat_;
        else
            s.res_ = res_ == 0 ? 0 : field_.characteristic() - res_;
        return s;
    }

    Scalar operator*(const Scalar& o) const {
        check_same(o);
        Scalar s(field_);
        if (field_.is_rationals())
            s.rat_ = rat_ * o.rat_;
        else
            s.res_ = static_cast<std::uint64_t>(
                static_cast<unsigned __int128>(res_) * o.res_ % field_.characteristic());
        return s;
    }

    [[nodiscard]] Scalar inverse() const {
        Scalar s(field_);
        if (field_.is_rationals()) {
            require(rat_ != 0, "Scalar: division by zero");
            s.rat_ = 1 / rat_;
        } else {
            s.res_ = mod_inverse(res_, field_.characteristic());
        }
        return s;
    }

    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const {
        if (field_ != o.field_) return false;
        return field_.is_rationals() ? rat_ == o.rat_ : res_ == o.res_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // "a/b" over Q (b > 0, gcd(a,b) = 1), decimal residue over F_p
    [[nodiscard]] std::string to_string() const {
        if (field_.is_prime_field()) return std::to_string(res_);
        return numerator(rat_).str() + "/" + denominator(rat_).str();
    }

    static Scalar parse(const Field& f, const std::string& text) {
        if (f.is_prime_field()) {
            std::size_t pos = 0;
            const long long v = std::stoll(text, &pos);
            require(pos == text.size(), "Scalar::parse: malformed residue '" + text + "'");
            return from_int(f, v);
        }
        const auto slash = text.find('/');
        if (slash == std::string::npos) return from_rational(BigInt(text), 1);
        return from_rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    }

private:
    explicit Scalar(const Field& f) : field_(f) {}

    static std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
        return (a + b) % p;  // p < 2^32 so no overflow
    }

    void check_same(const Scalar& o) const {
        require(field_ == o.field_, "Scalar: field mismatch (" + field_.name() + " vs " + o.field_.name() + ")");
    }

    Field field_;
    BigRat rat_;          // rationals
    std::uint64_t res_{0};  // prime field
};

}  // namespace mq
