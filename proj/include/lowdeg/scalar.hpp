#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace lowdeg::linalg {

/// A coefficient field: the rationals, or a prime field F_p with p < 2^31.
class Field {
public:
    /// The rationals.
    Field() = default;
    static Field rational() { return Field{}; }
    /// Throws DomainError unless p is a prime below 2^31.
    static Field prime(std::int64_t p);

    bool is_rational() const { return modulus_ == 0; }
    /// Characteristic; 0 for the rationals.
    std::uint32_t modulus() const { return modulus_; }
    std::string to_string() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    friend class Scalar;
    explicit Field(std::uint32_t modulus) : modulus_(modulus) {}

    std::uint32_t modulus_ = 0;
};

bool is_prime(std::int64_t n);

/// An exact field element. Rationals are kept in lowest terms with a
/// positive denominator, residues in [0, p). Arithmetic between different
/// fields throws FieldMismatchError.
class Scalar {
public:
    Scalar() = default;

    static Scalar rational(const mpq_class& q);
    static Scalar rational(long num, long den = 1);
    /// Residue of `value` modulo the prime `modulus`.
    static Scalar modular(std::int64_t value, std::int64_t modulus);
    static Scalar from_int(const Field& field, std::int64_t value);
    static Scalar zero(const Field& field) { return from_int(field, 0); }
    static Scalar one(const Field& field) { return from_int(field, 1); }

    Field field() const;
    bool is_rational() const { return std::holds_alternative<mpq_class>(value_); }
    bool is_zero() const;
    bool is_one() const;

    /// Throws DomainError for prime-field elements.
    const mpq_class& as_rational() const;
    /// Throws DomainError for rationals.
    std::uint32_t residue() const;

    Scalar inverse() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
    friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
    friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

    /// Values from different fields compare unequal.
    friend bool operator==(const Scalar& lhs, const Scalar& rhs);

    /// "p/q" (or "p") for rationals, "r mod p" for residues.
    std::string to_string() const;

private:
    struct Residue {
        std::uint32_t value;
        std::uint32_t modulus;
        friend bool operator==(const Residue&, const Residue&) = default;
    };

    explicit Scalar(Residue r) : value_(r) {}
    void require_same_field(const Scalar& rhs) const;

    std::variant<mpq_class, Residue> value_{mpq_class(0)};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace lowdeg::linalg
