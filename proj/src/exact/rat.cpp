#include "yhw/exact/rat.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace yhw {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr i128 kMax = std::numeric_limits<std::int64_t>::max();

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

int ctz128(u128 v) {
    const auto lo = static_cast<std::uint64_t>(v);
    if (lo != 0) return __builtin_ctzll(lo);
    return 64 + __builtin_ctzll(static_cast<std::uint64_t>(v >> 64));
}

// Binary gcd; gcd(0, b) = b.
u128 gcd128(u128 a, u128 b) {
    if (a == 0) return b;
    if (b == 0) return a;
    if ((a >> 64) == 0 && (b >> 64) == 0) {
        auto x = static_cast<std::uint64_t>(a);
        auto y = static_cast<std::uint64_t>(b);
        while (y != 0) {
            const auto t = x % y;
            x = y;
            y = t;
        }
        return x;
    }
    const int shift = ctz128(a | b);
    a >>= ctz128(a);
    do {
        b >>= ctz128(b);
        if (a > b) std::swap(a, b);
        b -= a;
    } while (b != 0);
    return a << shift;
}

mpz_class to_mpz(i128 v) {
    const u128 mag = abs128(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
    mpz_class out = (hi << 64) + lo;
    if (v < 0) out = -out;
    return out;
}

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace

Rat::Rat(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    *this = from_i128(n, d);
}

Rat::Rat(const mpq_class& q) {
    mpq_class c(q);
    c.canonicalize();
    *this = from_mpq(std::move(c));
}

Rat Rat::from_i128(i128 n, i128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const u128 g = gcd128(abs128(n), static_cast<u128>(d));
    if (g > 1) {
        n /= static_cast<i128>(g);
        d /= static_cast<i128>(g);
    }
    Rat r;
    if (n <= kMax && n >= -kMax && d <= kMax) {
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }
    mpq_class q(to_mpz(n), to_mpz(d));
    r.big_ = std::make_shared<const mpq_class>(std::move(q));
    r.num_ = 0;
    r.den_ = 1;
    return r;
}

Rat Rat::from_mpq(mpq_class q) {
    Rat r;
    if (mpz_fits_slong_p(q.get_num_mpz_t()) && mpz_fits_slong_p(q.get_den_mpz_t())) {
        const long n = q.get_num().get_si();
        const long d = q.get_den().get_si();
        if (n != std::numeric_limits<long>::min()) {
            r.num_ = n;
            r.den_ = d;
            return r;
        }
    }
    r.big_ = std::make_shared<const mpq_class>(std::move(q));
    return r;
}

Rat Rat::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!is_digits(num) || !is_digits(den))
        throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("rational literal with zero denominator '" + std::string(text) + "'");
    if (negative) n = -n;
    mpq_class q(n, d);
    q.canonicalize();
    return from_mpq(std::move(q));
}

std::string Rat::str() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

mpq_class Rat::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

mpz_class Rat::numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_)); }

mpz_class Rat::denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_)); }

bool Rat::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rat::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

Rat Rat::operator-() const {
    if (big_) return from_mpq(mpq_class(-*big_));
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rat Rat::reciprocal() const {
    if (is_zero()) throw std::domain_error("reciprocal of zero");
    if (big_) return from_mpq(mpq_class(1 / *big_));
    return from_i128(den_, num_);
}

Rat operator+(const Rat& a, const Rat& b) {
    if (a.big_ || b.big_) return Rat::from_mpq(a.to_mpq() + b.to_mpq());
    if (a.den_ == 1 && b.den_ == 1) return Rat::from_i128(static_cast<i128>(a.num_) + b.num_, 1);
    if (a.den_ == b.den_) return Rat::from_i128(static_cast<i128>(a.num_) + b.num_, a.den_);
    return Rat::from_i128(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                          static_cast<i128>(a.den_) * b.den_);
}

Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }

Rat operator*(const Rat& a, const Rat& b) {
    if (a.is_zero() || b.is_zero()) return Rat();
    if (a.big_ || b.big_) return Rat::from_mpq(a.to_mpq() * b.to_mpq());
    if (a.den_ == 1 && b.den_ == 1) return Rat::from_i128(static_cast<i128>(a.num_) * b.num_, 1);
    return Rat::from_i128(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
}

Rat operator/(const Rat& a, const Rat& b) { return a * b.reciprocal(); }

bool operator==(const Rat& a, const Rat& b) {
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    if (a.big_ || b.big_) return false;
    return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    if (a.big_ || b.big_) {
        const int c = cmp(a.to_mpq(), b.to_mpq());
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }
    return static_cast<i128>(a.num_) * b.den_ <=> static_cast<i128>(b.num_) * a.den_;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace yhw
