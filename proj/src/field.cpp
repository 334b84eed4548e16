#include "leib/field.hpp"

#include <charconv>

namespace leib {

namespace {

bool is_prime_i64(std::int64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::int64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

// Extended Euclid: inverse of a mod p, a != 0 mod p.
std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t; new_t = tmp;
        tmp = r - q * new_r;
        r = new_r; new_r = tmp;
    }
    if (r != 1) throw FieldError("residue has no inverse mod " + std::to_string(p));
    return ((t % p) + p) % p;
}

std::int64_t parse_i64(std::string_view s, const char *what) {
    std::int64_t v = 0;
    const char *b = s.data(), *e = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || ptr != e)
        throw ParseError(std::string("bad ") + what + ": '" + std::string(s) + "'");
    return v;
}

} // namespace

FieldSpec FieldSpec::gf(std::int64_t p) {
    if (p > (std::int64_t(1) << 31))
        throw FieldError("prime modulus exceeds 2^31: " + std::to_string(p));
    if (!is_prime_i64(p))
        throw FieldError(std::to_string(p) + " is not prime");
    return FieldSpec(p);
}

std::int64_t FieldSpec::prime() const {
    if (p_ == 0) throw FieldError("Q has no modulus");
    return p_;
}

std::string FieldSpec::name() const {
    return p_ == 0 ? "Q" : "GF(" + std::to_string(p_) + ")";
}

Rat::Rat(BigInt n, BigInt d) {
    if (d == 0) throw FieldError("zero denominator");
    if (d < 0) { n = -n; d = -d; }
    BigInt g = boost::multiprecision::gcd(n, d);
    if (g > 1) { n /= g; d /= g; }
    num = std::move(n);
    den = std::move(d);
}

Rat Rat::operator/(const Rat &o) const {
    if (o.is_zero()) throw FieldError("division by zero");
    return Rat(num * o.den, den * o.num);
}

Scalar Scalar::zero(const FieldSpec &f) { return Scalar(f); }

Scalar Scalar::one(const FieldSpec &f) { return of_int(f, 1); }

Scalar Scalar::of_int(const FieldSpec &f, long long v) {
    Scalar s(f);
    if (f.is_rationals()) {
        s.rat_ = Rat::of_int(v);
    } else {
        std::int64_t p = f.prime();
        s.res_ = ((v % p) + p) % p;
    }
    return s;
}

Scalar Scalar::rational(Rat v) {
    Scalar s(FieldSpec::rationals());
    s.rat_ = std::move(v);
    return s;
}

Scalar Scalar::residue(const FieldSpec &f, std::int64_t r) {
    std::int64_t p = f.prime();
    Scalar s(f);
    s.res_ = ((r % p) + p) % p;
    return s;
}

bool Scalar::is_zero() const {
    return field_.is_rationals() ? rat_.is_zero() : res_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_rationals() ? (rat_.num == 1 && rat_.den == 1) : res_ == 1;
}

std::int64_t Scalar::residue_value() const {
    if (!field_.is_prime_field()) throw FieldError("not a prime-field scalar");
    return res_;
}

const Rat &Scalar::rat_value() const {
    if (!field_.is_rationals()) throw FieldError("not a rational scalar");
    return rat_;
}

void Scalar::require_same_field(const Scalar &o) const {
    if (field_ != o.field_)
        throw FieldError("field mismatch: " + field_.name() + " vs " + o.field_.name());
}

Scalar Scalar::operator+(const Scalar &o) const {
    require_same_field(o);
    Scalar r(field_);
    if (field_.is_rationals()) r.rat_ = rat_ + o.rat_;
    else r.res_ = (res_ + o.res_) % field_.prime();
    return r;
}

Scalar Scalar::operator-(const Scalar &o) const {
    require_same_field(o);
    Scalar r(field_);
    if (field_.is_rationals()) r.rat_ = rat_ - o.rat_;
    else {
        std::int64_t p = field_.prime();
        r.res_ = (res_ - o.res_ + p) % p;
    }
    return r;
}

Scalar Scalar::operator*(const Scalar &o) const {
    require_same_field(o);
    Scalar r(field_);
    if (field_.is_rationals()) r.rat_ = rat_ * o.rat_;
    else r.res_ = (res_ * o.res_) % field_.prime();
    return r;
}

Scalar Scalar::operator/(const Scalar &o) const {
    require_same_field(o);
    if (o.is_zero()) throw FieldError("division by zero");
    Scalar r(field_);
    if (field_.is_rationals()) r.rat_ = rat_ / o.rat_;
    else r.res_ = (res_ * inv_mod(o.res_, field_.prime())) % field_.prime();
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r(field_);
    if (field_.is_rationals()) r.rat_ = -rat_;
    else r.res_ = res_ == 0 ? 0 : field_.prime() - res_;
    return r;
}

Scalar Scalar::inverse() const { return one(field_) / *this; }

bool Scalar::operator==(const Scalar &o) const {
    if (field_ != o.field_) return false;
    return field_.is_rationals() ? rat_ == o.rat_ : res_ == o.res_;
}

std::string Scalar::str() const {
    if (field_.is_prime_field()) return std::to_string(res_);
    std::string s = rat_.num.str();
    if (rat_.den != 1) s += "/" + rat_.den.str();
    return s;
}

Scalar Scalar::parse(const FieldSpec &f, std::string_view text) {
    if (text.empty()) throw ParseError("empty scalar");
    if (f.is_prime_field())
        return residue(f, parse_i64(text, "residue"));
    if (text.front() == '+') {
        text.remove_prefix(1); // BigInt's parser only knows '-'
        if (text.empty() || text.front() == '+' || text.front() == '-')
            throw ParseError("bad rational: '+" + std::string(text) + "'");
    }
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        // integer literal, arbitrary precision
        try {
            return rational(Rat(BigInt(std::string(text)), BigInt(1)));
        } catch (const std::exception &) {
            throw ParseError("bad rational: '" + std::string(text) + "'");
        }
    }
    std::string_view ns = text.substr(0, slash), ds = text.substr(slash + 1);
    if (ns.empty() || ds.empty())
        throw ParseError("bad rational: '" + std::string(text) + "'");
    try {
        BigInt n{std::string(ns)}, d{std::string(ds)};
        if (d <= 0) throw ParseError("denominator must be positive: '" + std::string(text) + "'");
        return rational(Rat(std::move(n), std::move(d)));
    } catch (const ParseError &) {
        throw;
    } catch (const std::exception &) {
        throw ParseError("bad rational: '" + std::string(text) + "'");
    }
}

std::vector<Scalar> field_elements(const FieldSpec &f) {
    if (f.is_rationals()) throw FieldError("infinite field");
    std::int64_t p = f.prime();
    std::vector<Scalar> out;
    out.reserve(static_cast<std::size_t>(p));
    for (std::int64_t r = 0; r < p; ++r) out.push_back(Scalar::residue(f, r));
    return out;
}

Scalar scalar_arith(const Scalar &a, const Scalar &b, ScalarOp op) {
    switch (op) {
    case ScalarOp::Add: return a + b;
    case ScalarOp::Sub: return a - b;
    case ScalarOp::Mul: return a * b;
    case ScalarOp::Div: return a / b;
    }
    throw Error("unreachable");
}

} // namespace leib
