#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qvp {

/// Exact rational number in canonical reduced form (denominator > 0).
///
/// Every distance and every finite objective value in the library is a Rat;
/// the principles are stated with exact equalities (phi(y) = phi(z),
/// d(y, x) = 0), so no floating point is used anywhere.
class Rat {
public:
    Rat() = default;
    Rat(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
    Rat(long num, long den);
    explicit Rat(mpq_class q);

    /// Parses "p/q" or "p". Throws std::invalid_argument on malformed text
    /// or a zero denominator. Non-reduced input is canonicalized.
    static Rat parse(std::string_view text);

    /// Canonical "p/q" text; the denominator is always written.
    std::string str() const;

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }
    std::string numerator_str() const { return q_.get_num().get_str(); }
    std::string denominator_str() const { return q_.get_den().get_str(); }
    const mpq_class& raw() const { return q_; }

    /// 2^-k as an exact rational.
    static Rat pow2_inv(unsigned k);

    Rat& operator+=(const Rat& o);
    Rat& operator-=(const Rat& o);
    Rat& operator*=(const Rat& o);
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.q_)); }

    friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// phi values: a finite rational or +infinity. Ordering is total with every
/// finite value below +infinity; addition absorbs into +infinity.
class ExtValue {
public:
    ExtValue() = default;  // +infinity
    ExtValue(Rat v) : v_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
    ExtValue(long v) : v_(Rat(v)) {}       // NOLINT(google-explicit-constructor)

    static ExtValue infinity() { return {}; }
    /// Parses "inf" or a rational.
    static ExtValue parse(std::string_view text);

    bool is_finite() const { return v_.has_value(); }
    bool is_infinite() const { return !v_.has_value(); }
    /// Precondition: is_finite().
    const Rat& value() const;

    std::string str() const { return v_ ? v_->str() : "inf"; }

    friend ExtValue operator+(const ExtValue& a, const ExtValue& b) {
        if (!a.v_ || !b.v_) return {};
        return ExtValue(*a.v_ + *b.v_);
    }

    friend bool operator==(const ExtValue& a, const ExtValue& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const ExtValue& a, const ExtValue& b) {
        if (!a.v_ && !b.v_) return std::strong_ordering::equal;
        if (!a.v_) return std::strong_ordering::greater;
        if (!b.v_) return std::strong_ordering::less;
        return *a.v_ <=> *b.v_;
    }

private:
    std::optional<Rat> v_;
};

std::ostream& operator<<(std::ostream& os, const ExtValue& v);

}  // namespace qvp
