#include "lowdeg/scalar.hpp"

#include <ostream>

#include "lowdeg/error.hpp"

namespace lowdeg::linalg {

namespace {

constexpr std::int64_t kMaxModulus = std::int64_t{1} << 31;

std::uint32_t reduce(std::int64_t value, std::uint32_t modulus) {
    std::int64_t r = value % static_cast<std::int64_t>(modulus);
    if (r < 0) r += modulus;
    return static_cast<std::uint32_t>(r);
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t modulus) {
    std::uint64_t result = 1 % modulus;
    base %= modulus;
    while (exp > 0) {
        if (exp & 1u) result = result * base % modulus;
        base = base * base % modulus;
        exp >>= 1u;
    }
    return static_cast<std::uint32_t>(result);
}

}  // namespace

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t f = 3; f * f <= n; f += 2) {
        if (n % f == 0) return false;
    }
    return true;
}

Field Field::prime(std::int64_t p) {
    if (p >= kMaxModulus || !is_prime(p)) {
        throw DomainError("modulus " + std::to_string(p) + " is not a prime below 2^31");
    }
    return Field(static_cast<std::uint32_t>(p));
}

std::string Field::to_string() const {
    return is_rational() ? "Q" : "F_" + std::to_string(modulus_);
}

Scalar Scalar::rational(const mpq_class& q) {
    Scalar s;
    mpq_class c = q;
    c.canonicalize();
    s.value_ = std::move(c);
    return s;
}

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw DomainError("zero denominator");
    return rational(mpq_class(mpz_class(num), mpz_class(den)));
}

Scalar Scalar::modular(std::int64_t value, std::int64_t modulus) {
    const Field f = Field::prime(modulus);
    return Scalar(Residue{reduce(value, f.modulus()), f.modulus()});
}

Scalar Scalar::from_int(const Field& field, std::int64_t value) {
    if (field.is_rational()) return rational(mpq_class(mpz_class(static_cast<long>(value))));
    return Scalar(Residue{reduce(value, field.modulus()), field.modulus()});
}

Field Scalar::field() const {
    if (const auto* r = std::get_if<Residue>(&value_)) {
        // Residues are only ever built from validated moduli.
        return Field(r->modulus);
    }
    return Field::rational();
}

bool Scalar::is_zero() const {
    if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
    return std::get<Residue>(value_).value == 0;
}

bool Scalar::is_one() const {
    if (const auto* q = std::get_if<mpq_class>(&value_)) return *q == 1;
    return std::get<Residue>(value_).value == 1;
}

const mpq_class& Scalar::as_rational() const {
    if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
    throw DomainError("scalar " + to_string() + " is not rational");
}

std::uint32_t Scalar::residue() const {
    if (const auto* r = std::get_if<Residue>(&value_)) return r->value;
    throw DomainError("scalar " + to_string() + " is not a prime-field element");
}

void Scalar::require_same_field(const Scalar& rhs) const {
    const bool same = value_.index() == rhs.value_.index() &&
                      (is_rational() || std::get<Residue>(value_).modulus ==
                                            std::get<Residue>(rhs.value_).modulus);
    if (!same) {
        throw FieldMismatchError("cannot combine " + to_string() + " and " + rhs.to_string());
    }
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DomainError("division by zero");
    if (const auto* q = std::get_if<mpq_class>(&value_)) {
        return rational(1 / *q);
    }
    const auto& r = std::get<Residue>(value_);
    // Fermat: a^(p-2) = a^-1 in F_p.
    return Scalar(Residue{pow_mod(r.value, r.modulus - 2, r.modulus), r.modulus});
}

Scalar Scalar::operator-() const {
    if (const auto* q = std::get_if<mpq_class>(&value_)) return rational(-*q);
    const auto& r = std::get<Residue>(value_);
    return Scalar(Residue{r.value == 0 ? 0 : r.modulus - r.value, r.modulus});
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    require_same_field(rhs);
    if (auto* q = std::get_if<mpq_class>(&value_)) {
        *q += std::get<mpq_class>(rhs.value_);
    } else {
        auto& r = std::get<Residue>(value_);
        const std::uint64_t sum = std::uint64_t{r.value} + std::get<Residue>(rhs.value_).value;
        r.value = static_cast<std::uint32_t>(sum % r.modulus);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar& Scalar::operator*=(const Scalar& rhs) {
    require_same_field(rhs);
    if (auto* q = std::get_if<mpq_class>(&value_)) {
        *q *= std::get<mpq_class>(rhs.value_);
    } else {
        auto& r = std::get<Residue>(value_);
        const std::uint64_t prod = std::uint64_t{r.value} * std::get<Residue>(rhs.value_).value;
        r.value = static_cast<std::uint32_t>(prod % r.modulus);
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    require_same_field(rhs);
    return *this *= rhs.inverse();
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
    if (lhs.value_.index() != rhs.value_.index()) return false;
    if (const auto* q = std::get_if<mpq_class>(&lhs.value_)) {
        return *q == std::get<mpq_class>(rhs.value_);
    }
    return std::get<Scalar::Residue>(lhs.value_) == std::get<Scalar::Residue>(rhs.value_);
}

std::string Scalar::to_string() const {
    if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
    const auto& r = std::get<Residue>(value_);
    return std::to_string(r.value) + " mod " + std::to_string(r.modulus);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace lowdeg::linalg
