#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace wpb {

// A field element is its canonical encoding 0..q-1. For q = p^e with e > 1
// the base-p digits are the polynomial coefficients, lowest degree first.
using Element = std::uint8_t;

/// Arithmetic in GF(q) for prime powers q <= 256.
///
/// Extension fields are built over the lexicographically smallest monic
/// irreducible polynomial of degree e (coefficients compared from the highest
/// degree down), so encodings are stable across runs and machines. Addition
/// and negation act digit-wise mod p; multiplication and inversion go through
/// exp/log tables of the smallest primitive element. All operations are table
/// lookups.
class Field {
public:
    unsigned q() const { return q_; }
    unsigned p() const { return p_; }
    unsigned e() const { return e_; }
    bool is_prime() const { return e_ == 1; }

    Element add(Element a, Element b) const { return add_[a * q_ + b]; }
    Element sub(Element a, Element b) const { return sub_[a * q_ + b]; }
    Element neg(Element a) const { return neg_[a]; }
    Element mul(Element a, Element b) const { return mul_[a * q_ + b]; }
    Element inv(Element a) const;

    /// Coefficients of the defining polynomial, lowest degree first (monic,
    /// size e + 1). For prime fields this is x.
    const std::vector<unsigned>& modulus() const { return modulus_; }
    /// Smallest element of multiplicative order q - 1.
    Element primitive() const { return primitive_; }

    /// Exhaustive check of the field axioms; throws on the first violation.
    void check_axioms() const;

    friend bool operator==(const Field& a, const Field& b) { return a.q_ == b.q_; }

private:
    friend std::shared_ptr<const Field> make_field(unsigned q);
    Field(unsigned p, unsigned e);

    unsigned q_;
    unsigned p_;
    unsigned e_;
    Element primitive_ = 1;
    std::vector<unsigned> modulus_;
    std::vector<Element> add_;
    std::vector<Element> sub_;
    std::vector<Element> mul_;
    std::vector<Element> neg_;
    std::vector<Element> inv_;
    std::vector<Element> exp_; // exp_[i] = primitive^i, i in [0, q-1)
    std::vector<unsigned> log_;
};

using FieldPtr = std::shared_ptr<const Field>;

/// Builds GF(q); throws NotAPrimePower unless q = p^e <= 256. Fields with
/// q <= 16 are validated against the axioms exhaustively.
FieldPtr make_field(unsigned q);

/// Returns (p, e) with q = p^e, or (0, 0) if q is not a prime power.
std::pair<unsigned, unsigned> prime_power(unsigned q);

bool is_prime(unsigned n);

} // namespace wpb
