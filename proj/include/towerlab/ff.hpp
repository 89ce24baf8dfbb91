#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace towerlab {

class Field;
class FieldElement;
using FieldPtr = std::shared_ptr<const Field>;

/// Explicit finite field F_{p^k}: word-size prime characteristic p,
/// extension degree k, and a monic irreducible modulus of degree k over
/// the prime field. Elements are coefficient vectors over F_p reduced
/// against the modulus. Immutable; share freely across threads.
class Field : public std::enable_shared_from_this<Field> {
public:
    /// Field with the canonical modulus: the lexicographically smallest
    /// monic irreducible of degree k (coefficients compared from the
    /// leading end down), so repeated runs are bit-identical.
    static FieldPtr make(std::int64_t p, int k);

    /// Field with an explicit modulus (little-endian coefficients, values
    /// reduced mod p). Throws std::invalid_argument if p is not prime or
    /// the modulus is not monic irreducible of degree exactly k.
    static FieldPtr make(std::int64_t p, int k, const std::vector<std::int64_t>& modulus);

    std::int64_t characteristic() const { return p_; }
    int degree() const { return k_; }
    std::uint64_t size() const { return size_; }

    /// Modulus coefficients, little-endian, length k+1, monic.
    const std::vector<std::uint32_t>& modulus() const { return mod_; }

    FieldElement zero() const;
    FieldElement one() const;
    /// The residue class of x; only defined for k >= 2.
    FieldElement generator() const;

    /// Element with canonical code sum c_i p^i; code < size().
    FieldElement from_code(std::uint64_t code) const;
    /// Prime-subfield scalar n mod p.
    FieldElement from_int(std::int64_t n) const;

    bool same(const Field& other) const;
    /// Stable identity string "p^k:modcode" for registries and hashing.
    const std::string& key() const { return key_; }

    std::string element_str(const FieldElement& a) const;

    // Element arithmetic. All operands must belong to this field.
    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement inv(const FieldElement& a) const;
    FieldElement pow(const FieldElement& a, std::uint64_t e) const;

    /// a^q for q = p^d with d | k; iterating k/d times is the identity.
    FieldElement frobenius(const FieldElement& a, std::uint64_t q) const;

private:
    Field(std::int64_t p, int k, std::vector<std::uint32_t> mod);

    std::vector<std::uint32_t> raw_mul(std::span<const std::uint32_t> a,
                                       std::span<const std::uint32_t> b) const;
    void raw_reduce(std::vector<std::uint32_t>& v) const;

    std::int64_t p_;
    int k_;
    std::vector<std::uint32_t> mod_;
    std::uint64_t size_;
    std::string key_;
};

/// Immutable value: owning field pointer plus coefficient vector over F_p
/// of length k, little-endian by power of the field generator.
class FieldElement {
public:
    FieldElement() = default;

    const FieldPtr& field() const { return k_; }
    std::span<const std::uint32_t> coeffs() const { return c_; }
    bool valid() const { return static_cast<bool>(k_); }

    bool is_zero() const;
    bool is_one() const;

    /// Canonical integer code sum c_i p^i; total order on the field.
    std::uint64_t code() const;

    FieldElement operator+(const FieldElement& o) const { return k_->add(*this, o); }
    FieldElement operator-(const FieldElement& o) const { return k_->sub(*this, o); }
    FieldElement operator*(const FieldElement& o) const { return k_->mul(*this, o); }
    FieldElement operator/(const FieldElement& o) const { return k_->mul(*this, k_->inv(o)); }
    FieldElement operator-() const { return k_->neg(*this); }
    FieldElement inverse() const { return k_->inv(*this); }
    FieldElement pow(std::uint64_t e) const { return k_->pow(*this, e); }

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    std::string str() const { return k_->element_str(*this); }

private:
    friend class Field;
    FieldElement(FieldPtr k, std::vector<std::uint32_t> c) : k_(std::move(k)), c_(std::move(c)) {}

    FieldPtr k_;
    std::vector<std::uint32_t> c_;
};

/// Ring homomorphism F_{p^a} -> F_{p^b} for a | b, determined by the image
/// of the source generator: the root of the source modulus in the target
/// field with the lexicographically smallest coefficient vector. Instances
/// are built once per (source, target) pair and cached process-wide.
class Embedding {
public:
    /// Cached embedding; throws std::invalid_argument when the fields are
    /// incompatible (different characteristic or source degree does not
    /// divide target degree).
    static const Embedding& get(const FieldPtr& src, const FieldPtr& dst);

    const FieldPtr& source() const { return src_; }
    const FieldPtr& target() const { return dst_; }
    const FieldElement& generator_image() const { return gen_image_; }

    FieldElement operator()(const FieldElement& a) const;

private:
    Embedding(FieldPtr src, FieldPtr dst, FieldElement gen_image);

    FieldPtr src_, dst_;
    FieldElement gen_image_;
    std::vector<FieldElement> gen_powers_;  // gen_image^0 .. gen_image^{a-1}
};

/// Throws std::invalid_argument unless both elements belong to the same field.
void require_same_field(const FieldElement& a, const FieldElement& b, const char* op);

}  // namespace towerlab
