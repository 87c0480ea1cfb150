#include "qvp/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace qvp {

namespace {

bool is_integer_text(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

mpz_class parse_integer(std::string_view s) {
    if (s[0] == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

}  // namespace

Rat::Rat(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    q_ = mpq_class(num, 1) / mpq_class(den, 1);
}

Rat::Rat(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rat Rat::parse(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                                 : text.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den) || den[0] == '-' || den[0] == '+') {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    mpz_class n = parse_integer(num);
    mpz_class d = parse_integer(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return Rat(std::move(q));
}

std::string Rat::str() const { return numerator_str() + "/" + denominator_str(); }

Rat Rat::pow2_inv(unsigned k) {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, k);
    return Rat(mpq_class(mpz_class(1), den));
}

Rat& Rat::operator+=(const Rat& o) {
    q_ += o.q_;
    return *this;
}
Rat& Rat::operator-=(const Rat& o) {
    q_ -= o.q_;
    return *this;
}
Rat& Rat::operator*=(const Rat& o) {
    q_ *= o.q_;
    return *this;
}
Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("division by zero rational");
    q_ /= o.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

ExtValue ExtValue::parse(std::string_view text) {
    if (text == "inf") return infinity();
    return ExtValue(Rat::parse(text));
}

const Rat& ExtValue::value() const {
    if (!v_) throw std::logic_error("value() on +infinity");
    return *v_;
}

std::ostream& operator<<(std::ostream& os, const ExtValue& v) { return os << v.str(); }

}  // namespace qvp
