#ifndef LEIB_FIELD_HPP
#define LEIB_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "leib/errors.hpp"

namespace leib {

using BigInt = boost::multiprecision::cpp_int;

/// Ground field descriptor: the rationals Q or a prime field GF(p).
class FieldSpec {
  public:
    /// The field Q.
    static FieldSpec rationals() { return FieldSpec(0); }

    /// GF(p). Throws FieldError unless p is a prime <= 2^31.
    static FieldSpec gf(std::int64_t p);

    bool is_rationals() const { return p_ == 0; }
    bool is_prime_field() const { return p_ != 0; }

    /// Modulus of a prime field; throws for Q.
    std::int64_t prime() const;

    /// "Q" or "GF(p)".
    std::string name() const;

    friend bool operator==(const FieldSpec &a, const FieldSpec &b) { return a.p_ == b.p_; }
    friend bool operator!=(const FieldSpec &a, const FieldSpec &b) { return a.p_ != b.p_; }

  private:
    explicit FieldSpec(std::int64_t p) : p_(p) {}
    std::int64_t p_; // 0 encodes Q
};

/// Arbitrary-precision fraction in lowest terms with positive denominator.
struct Rat {
    BigInt num{0};
    BigInt den{1};

    Rat() = default;
    Rat(BigInt n, BigInt d); // normalizes; throws FieldError on d == 0
    static Rat of_int(long long v) { return Rat(BigInt(v), BigInt(1)); }

    bool is_zero() const { return num == 0; }
    Rat operator+(const Rat &o) const { return Rat(num * o.den + o.num * den, den * o.den); }
    Rat operator-(const Rat &o) const { return Rat(num * o.den - o.num * den, den * o.den); }
    Rat operator*(const Rat &o) const { return Rat(num * o.num, den * o.den); }
    Rat operator/(const Rat &o) const;
    Rat operator-() const { Rat r; r.num = -num; r.den = den; return r; }
    bool operator==(const Rat &o) const { return num == o.num && den == o.den; }
};

/// An element of a FieldSpec: exact rational or prime-field residue.
///
/// Scalars are immutable values. Arithmetic across distinct fields throws
/// FieldError; division by zero throws FieldError.
class Scalar {
  public:
    Scalar() : field_(FieldSpec::rationals()) {}

    static Scalar zero(const FieldSpec &f);
    static Scalar one(const FieldSpec &f);
    static Scalar of_int(const FieldSpec &f, long long v);
    static Scalar rational(Rat v);
    static Scalar residue(const FieldSpec &f, std::int64_t r); // reduces mod p

    const FieldSpec &field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    /// Residue in [0, p) for prime-field scalars; throws for Q.
    std::int64_t residue_value() const;
    /// Fraction value for Q scalars; throws for GF(p).
    const Rat &rat_value() const;

    Scalar operator+(const Scalar &o) const;
    Scalar operator-(const Scalar &o) const;
    Scalar operator*(const Scalar &o) const;
    Scalar operator/(const Scalar &o) const; // throws FieldError if o == 0
    Scalar operator-() const;
    Scalar inverse() const;

    bool operator==(const Scalar &o) const;
    bool operator!=(const Scalar &o) const { return !(*this == o); }

    /// Canonical text: Q as "a" or "a/b" (b > 0, lowest terms); GF(p) as the
    /// decimal residue. This syntax is used verbatim in algebra files.
    std::string str() const;

    /// Parses the textual syntax above. For GF(p) an optional sign is
    /// accepted and the value is reduced mod p. Throws ParseError.
    static Scalar parse(const FieldSpec &f, std::string_view text);

  private:
    explicit Scalar(const FieldSpec &f) : field_(f) {}
    void require_same_field(const Scalar &o) const;

    FieldSpec field_;
    std::int64_t res_ = 0; // GF(p) payload
    Rat rat_;              // Q payload
};

/// All elements of a prime field, zero first, ascending residues.
/// Throws FieldError for Q ("infinite field").
std::vector<Scalar> field_elements(const FieldSpec &f);

/// op codes for scalar_arith.
enum class ScalarOp { Add, Sub, Mul, Div };

/// Dispatches one arithmetic op; same contract as the operators.
Scalar scalar_arith(const Scalar &a, const Scalar &b, ScalarOp op);

} // namespace leib

#endif
