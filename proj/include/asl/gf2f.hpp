#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace asl {

class FieldCtx;

// An element of F_q, q = 2^f, as a bit-vector in the polynomial basis
// 1, g, ..., g^{f-1}. The tag is the modulus of the owning field; two
// elements are only combinable when their tags agree.
class FqElem {
  public:
    FqElem() = default;

    std::uint32_t bits() const noexcept { return bits_; }
    std::uint32_t tag() const noexcept { return tag_; }
    bool is_zero() const noexcept { return bits_ == 0; }
    bool is_one() const noexcept { return bits_ == 1; }

    friend bool operator==(const FqElem &, const FqElem &) = default;
    friend auto operator<=>(const FqElem &a, const FqElem &b) {
        if (auto c = a.tag_ <=> b.tag_; c != 0) {
            return c;
        }
        return a.bits_ <=> b.bits_;
    }

  private:
    friend class FieldCtx;
    FqElem(std::uint32_t bits, std::uint32_t tag) : bits_(bits), tag_(tag) {}

    std::uint32_t bits_ = 0;
    std::uint32_t tag_ = 0;
};

/// True when `poly` (bit i = coefficient of g^i) has no factor of degree
/// between 1 and deg/2. Exhaustive trial division.
bool is_irreducible(std::uint32_t poly);

/// Degree of a nonzero bit polynomial; -1 for zero.
int poly_degree(std::uint32_t poly) noexcept;

/// The residue field k = F_q. Immutable once constructed.
class FieldCtx {
  public:
    static constexpr int kMaxDegree = 16;

    /// Lexicographically smallest irreducible polynomial of degree f.
    static std::uint32_t default_modulus(int f);

    /// Throws DegreeMismatch for f outside [1, 16] or a modulus of the wrong
    /// degree, ReduciblePolynomial when the modulus factors.
    explicit FieldCtx(int f, std::optional<std::uint32_t> modulus = std::nullopt);

    static std::shared_ptr<const FieldCtx> make(int f, std::optional<std::uint32_t> modulus = std::nullopt);

    int degree() const noexcept { return f_; }
    std::uint32_t modulus() const noexcept { return modulus_; }
    std::uint64_t order() const noexcept { return std::uint64_t{1} << f_; }

    FqElem zero() const noexcept { return FqElem(0, modulus_); }
    FqElem one() const noexcept { return FqElem(1, modulus_); }
    /// The class of g, reduced (for f = 1 with modulus g this is zero).
    FqElem gen() const { return element(2); }
    /// Element from an arbitrary bit polynomial, reduced mod the modulus.
    FqElem element(std::uint64_t bits) const;

    FqElem add(FqElem x, FqElem y) const;
    FqElem mul(FqElem x, FqElem y) const;
    FqElem square(FqElem x) const { return mul(x, x); }
    FqElem pow(FqElem x, std::uint64_t e) const;
    FqElem inv(FqElem x) const;

    /// Absolute trace to F_2, returned as 0 or 1.
    int trace(FqElem x) const;
    /// Inverse of Frobenius: x^{2^{f-1}}.
    FqElem sqrt(FqElem x) const;

    /// A solution z of z^2 + z = c, or nullopt when Tr(c) = 1. The returned
    /// solution is the one with the constant bit cleared.
    std::optional<FqElem> solve_artin_schreier(FqElem c) const;

    /// Smallest element (by bit value) of trace 1.
    FqElem trace_one_element() const;

    /// All q elements in increasing bit order.
    std::vector<FqElem> elements() const;

    /// Polynomial in g, highest power first, e.g. "g^2+g+1"; "0" for zero.
    std::string render(FqElem x) const;
    std::string modulus_string() const;

    bool owns(FqElem x) const noexcept { return x.tag() == modulus_; }

  private:
    void check(FqElem x) const;

    int f_;
    std::uint32_t modulus_;
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

} // namespace asl
