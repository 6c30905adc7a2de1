#pragma once

// Exact rational scalars.
//
// Values that fit in a pair of 64-bit words are kept inline; everything else
// is promoted to a GMP rational held behind an immutable shared pointer, so
// copies stay cheap either way.  The representation is canonical: a value is
// stored big only if it does not fit the inline form, the fraction is always
// reduced and the denominator is positive.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace yhw {

class Rat {
public:
    Rat() = default;
    Rat(std::int64_t n) {  // NOLINT(google-explicit-constructor)
        if (n == INT64_MIN) *this = from_i128(n, 1);
        else num_ = n;
    }
    Rat(int n) : num_(n) {}           // NOLINT(google-explicit-constructor)
    Rat(std::int64_t n, std::int64_t d);
    explicit Rat(const mpq_class& q);

    /// Parses "p" or "p/q" with an optional leading minus; q must be nonzero.
    static Rat parse(std::string_view text);

    std::string str() const;
    mpq_class to_mpq() const;
    mpz_class numerator() const;
    mpz_class denominator() const;

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const;
    int sign() const;

    Rat operator-() const;
    Rat reciprocal() const;

    friend Rat operator+(const Rat& a, const Rat& b);
    friend Rat operator-(const Rat& a, const Rat& b);
    friend Rat operator*(const Rat& a, const Rat& b);
    friend Rat operator/(const Rat& a, const Rat& b);

    Rat& operator+=(const Rat& b) { return *this = *this + b; }
    Rat& operator-=(const Rat& b) { return *this = *this - b; }
    Rat& operator*=(const Rat& b) { return *this = *this * b; }
    Rat& operator/=(const Rat& b) { return *this = *this / b; }

    friend bool operator==(const Rat& a, const Rat& b);
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

private:
    using i128 = __int128;

    static Rat from_i128(i128 n, i128 d);
    static Rat from_mpq(mpq_class q);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace yhw
