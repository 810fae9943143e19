#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace holodiff {

// Exact rational number in lowest terms with positive denominator.
//
// Values whose numerator and denominator fit in 64 bits are kept inline;
// anything larger spills to GMP.  The representation is normalized so that
// a value is stored inline whenever it fits.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(const mpq_class& q);

    Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
        if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
    }
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& o) {
        if (this != &o) {
            num_ = o.num_;
            den_ = o.den_;
            big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    Rational& operator=(Rational&&) noexcept = default;
    ~Rational() = default;

    // Parses "a" or "a/b" with decimal integers of any size.
    static Rational parse(std::string_view text);

    mpq_class to_mpq() const;
    mpz_class numerator() const;
    mpz_class denominator() const;

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_integer() const { return !big_ ? den_ == 1 : big_->get_den() == 1; }
    int sign() const { return big_ ? sgn(*big_) : (num_ > 0) - (num_ < 0); }
    // The value as a machine integer, if it is an integer that fits.
    std::optional<std::int64_t> small_integer() const {
        if (!big_ && den_ == 1) return num_;
        return std::nullopt;
    }
    // Requires is_integer() and a value that fits in 64 bits.
    std::int64_t to_int64() const;
    // Largest integer not exceeding the value.
    std::int64_t floor() const;
    // "num/den", always with an explicit denominator.
    std::string to_string() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o) {
        std::int64_t r;
        if (!big_ && !o.big_ && den_ == 1 && o.den_ == 1 && !__builtin_add_overflow(num_, o.num_, &r)) {
            num_ = r;
            return *this;
        }
        return add_slow(o, false);
    }
    Rational& operator-=(const Rational& o) {
        std::int64_t r;
        if (!big_ && !o.big_ && den_ == 1 && o.den_ == 1 && !__builtin_sub_overflow(num_, o.num_, &r)) {
            num_ = r;
            return *this;
        }
        return add_slow(o, true);
    }
    Rational& operator*=(const Rational& o) {
        std::int64_t r;
        if (!big_ && !o.big_ && den_ == 1 && o.den_ == 1 && !__builtin_mul_overflow(num_, o.num_, &r)) {
            num_ = r;
            return *this;
        }
        return mul_slow(o);
    }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
        if (a.big_ && b.big_) return *a.big_ == *b.big_;
        return false;  // normalized: a big value never equals an inline one
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    Rational& add_slow(const Rational& o, bool subtract);
    Rational& mul_slow(const Rational& o);
    void assign(mpq_class q);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

}  // namespace holodiff
