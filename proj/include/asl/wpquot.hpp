#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "asl/gf2f.hpp"
#include "asl/laurent.hpp"

namespace asl {

/// The distinguished unramified generator a0: the smallest element of F_q
/// with trace one (a0 = 1 when f = 1).
FqElem distinguished_constant(const FieldCtx &k);

// Canonical representative of a coset a + wp(K):
//
//   eps * a0 + sum_{n odd, n > 0} pp[n] * x^{-n}
//
// Every coset has exactly one such representative.
class WpCoset {
  public:
    explicit WpCoset(FieldPtr field);
    /// Throws DomainError unless every key is odd and positive. Zero
    /// coefficients are dropped.
    WpCoset(FieldPtr field, bool eps, std::map<std::int64_t, FqElem> pp);

    static WpCoset unramified(FieldPtr field);
    /// The coset of c * x^{-n}; n must be odd and positive.
    static WpCoset pole(FieldPtr field, FqElem c, std::int64_t n);

    const FieldPtr &field() const noexcept { return field_; }
    const FieldCtx &ctx() const noexcept { return *field_; }
    bool eps() const noexcept { return eps_; }
    const std::map<std::int64_t, FqElem> &principal() const noexcept { return pp_; }
    bool is_zero() const noexcept { return !eps_ && pp_.empty(); }

    friend bool operator==(const WpCoset &a, const WpCoset &b) {
        return a.ctx().modulus() == b.ctx().modulus() && a.eps_ == b.eps_ && a.pp_ == b.pp_;
    }
    /// Total order: by principal part (as a sorted term list), then eps.
    friend std::strong_ordering operator<=>(const WpCoset &a, const WpCoset &b);

  private:
    FieldPtr field_;
    bool eps_ = false;
    std::map<std::int64_t, FqElem> pp_;
};

WpCoset operator+(const WpCoset &u, const WpCoset &v);

/// The canonical representative as an exact Laurent polynomial.
LaurentSeries lift(const WpCoset &u);

/// "x^-3 + g*x^-1 + a0"; "0" for the zero coset.
std::string render(const WpCoset &u);

struct CosetLevel {
    enum class Kind { zero, unramified, ramified };
    Kind kind = Kind::zero;
    /// Break of K(wp^{-1}(u)) when ramified, else 0.
    std::int64_t t = 0;

    friend bool operator==(const CosetLevel &, const CosetLevel &) = default;
};

CosetLevel coset_level(const WpCoset &u);

// Parts of an element w with a + lift(reduce(a)) = wp(w):
//   principal: the folding terms sqrt(c) x^{-m},
//   constant:  z in F_q with z^2 + z = c0 + Tr(c0) a0,
//   integral:  wp_solve of the part of a in p.
struct WpWitness {
    LaurentSeries principal;
    FqElem constant;
    LaurentSeries integral;

    LaurentSeries total() const;
};

struct Reduction {
    WpCoset coset;
    WpWitness witness;
};

/// Throws PrecisionExhausted when the constant term of a is unknown.
WpCoset reduce_mod_wp(const LaurentSeries &a);
Reduction reduce_mod_wp_with_witness(const LaurentSeries &a);

/// dim_{F_2} V_n = 1 + f * ceil(n / 2).
std::int64_t filtration_dim(std::int64_t n, const FieldCtx &k);
/// The single-digit count 1 + ceil(n / 2); agrees with filtration_dim for f = 1.
std::int64_t filtration_dim_prime_field(std::int64_t n);

/// {a0} followed by g^j x^{-m} for odd m <= n (ascending), 0 <= j < f.
std::vector<WpCoset> vn_basis(std::int64_t n, const FieldPtr &field);

/// Sum of the basis vectors selected by the bits of mask.
WpCoset coset_from_mask(const std::vector<WpCoset> &basis, std::uint64_t mask);
/// Inverse of coset_from_mask for the vn_basis(n) ordering. Throws
/// DomainError when u is not in V_n.
std::uint64_t coset_mask(const WpCoset &u, std::int64_t n);

/// [a, b) = Tr res(a * db / b) for arbitrary series a.
int as_symbol_series(const LaurentSeries &a, const LaurentSeries &b);
/// [a, b) for a coset, through its canonical lift.
int as_symbol(const WpCoset &a, const LaurentSeries &b);

/// b -> (-1)^{[a, b)}, a multiplicative quadratic character of K^x.
class QuadraticCharacter {
  public:
    /// Throws ZeroCoset for the zero coset.
    explicit QuadraticCharacter(WpCoset a);

    int operator()(const LaurentSeries &b) const { return as_symbol(coset_, b) == 0 ? 1 : -1; }
    const WpCoset &coset() const noexcept { return coset_; }

  private:
    WpCoset coset_;
};

QuadraticCharacter quad_char(const WpCoset &a);

} // namespace asl
