#include "holodiff/rational.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

#include "holodiff/errors.hpp"

namespace holodiff {
namespace {

__extension__ using wide_int = __int128;

mpq_class small_to_mpq(std::int64_t num, std::int64_t den) {
    mpq_class q;
    mpz_set_si(q.get_num_mpz_t(), num);
    mpz_set_si(q.get_den_mpz_t(), den);
    return q;
}

bool fits(wide_int v) {
    return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

wide_int wide_gcd(wide_int a, wide_int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        const wide_int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    wide_int n = num;
    wide_int d = den;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const wide_int g = wide_gcd(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    if (fits(n) && fits(d)) {
        num_ = static_cast<std::int64_t>(n);
        den_ = static_cast<std::int64_t>(d);
    } else {
        assign(small_to_mpq(num, den));
    }
}

Rational::Rational(const mpq_class& q) {
    mpq_class copy(q);
    copy.canonicalize();
    assign(std::move(copy));
}

void Rational::assign(mpq_class q) {
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
        num_ = q.get_num().get_si();
        den_ = q.get_den().get_si();
        big_.reset();
    } else {
        num_ = 0;
        den_ = 1;
        big_ = std::make_unique<mpq_class>(std::move(q));
    }
}

mpq_class Rational::to_mpq() const { return big_ ? *big_ : small_to_mpq(num_, den_); }

mpz_class Rational::numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_)); }

mpz_class Rational::denominator() const {
    return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_));
}

Rational Rational::parse(std::string_view text) {
    const std::string s(text);
    if (s.empty()) throw ValidationError("empty rational literal");
    const auto slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i) {
            if (t[i] < '0' || t[i] > '9') return false;
        }
        return true;
    };
    const std::string num = s.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den)) throw ValidationError("malformed rational literal '" + s + "'");
    mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
    mpz_class d(den[0] == '+' ? den.substr(1) : den, 10);
    if (d == 0) throw ValidationError("zero denominator in '" + s + "'");
    return Rational(mpq_class(n, d));
}

Rational Rational::operator-() const {
    if (!big_ && num_ != std::numeric_limits<std::int64_t>::min()) {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    return Rational(mpq_class(-to_mpq()));
}

Rational& Rational::add_slow(const Rational& o, bool subtract) {
    if (!big_ && !o.big_) {
        // a/b +- c/d with 128-bit intermediates.
        const wide_int g = std::gcd(den_, o.den_);
        const wide_int lhs = static_cast<wide_int>(num_) * (o.den_ / g);
        const wide_int rhs = static_cast<wide_int>(o.num_) * (den_ / g);
        wide_int n = subtract ? lhs - rhs : lhs + rhs;
        wide_int d = static_cast<wide_int>(den_) * (o.den_ / g);
        const wide_int r = wide_gcd(n, d);
        if (r > 1) {
            n /= r;
            d /= r;
        }
        if (fits(n) && fits(d)) {
            num_ = static_cast<std::int64_t>(n);
            den_ = static_cast<std::int64_t>(d);
            return *this;
        }
    }
    mpq_class q = to_mpq();
    if (subtract) {
        q -= o.to_mpq();
    } else {
        q += o.to_mpq();
    }
    assign(std::move(q));
    return *this;
}

Rational& Rational::mul_slow(const Rational& o) {
    if (!big_ && !o.big_) {
        const std::int64_t g1 = std::gcd(num_, o.den_);
        const std::int64_t g2 = std::gcd(o.num_, den_);
        const wide_int n = static_cast<wide_int>(g1 ? num_ / g1 : 0) * (g2 ? o.num_ / g2 : 0);
        const wide_int d = static_cast<wide_int>(g2 ? den_ / g2 : den_) * (g1 ? o.den_ / g1 : o.den_);
        if (n == 0) {
            num_ = 0;
            den_ = 1;
            return *this;
        }
        if (fits(n) && fits(d)) {
            num_ = static_cast<std::int64_t>(n);
            den_ = static_cast<std::int64_t>(d);
            return *this;
        }
    }
    assign(to_mpq() * o.to_mpq());
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    if (!o.big_) {
        Rational inv;
        if (o.num_ != std::numeric_limits<std::int64_t>::min()) {
            inv.num_ = o.num_ < 0 ? -o.den_ : o.den_;
            inv.den_ = o.num_ < 0 ? -o.num_ : o.num_;
            return *this *= inv;
        }
    }
    assign(to_mpq() / o.to_mpq());
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c;
    if (!a.big_ && !b.big_) {
        const wide_int lhs = static_cast<wide_int>(a.num_) * b.den_;
        const wide_int rhs = static_cast<wide_int>(b.num_) * a.den_;
        c = (lhs > rhs) - (lhs < rhs);
    } else {
        c = cmp(a.to_mpq(), b.to_mpq());
    }
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::int64_t Rational::to_int64() const {
    if (!is_integer()) throw ConsistencyError("expected an integer, got " + to_string());
    if (big_) throw ConsistencyError("integer out of 64-bit range: " + to_string());
    return num_;
}

std::int64_t Rational::floor() const {
    if (!big_) {
        const std::int64_t q = num_ / den_;
        return (num_ % den_ != 0 && num_ < 0) ? q - 1 : q;
    }
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), big_->get_num_mpz_t(), big_->get_den_mpz_t());
    if (!q.fits_slong_p()) throw ConsistencyError("floor out of 64-bit range");
    return q.get_si();
}

std::string Rational::to_string() const {
    if (!big_) return std::to_string(num_) + "/" + std::to_string(den_);
    return big_->get_num().get_str() + "/" + big_->get_den().get_str();
}

}  // namespace holodiff
