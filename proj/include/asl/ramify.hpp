#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "asl/gf2f.hpp"
#include "asl/wpquot.hpp"

namespace asl {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// "n" or "n/d" in lowest terms.
std::string to_string(const Rational &r);
/// 2^e as an exact rational; e may be negative.
Rational pow2(std::int64_t e);

// A plane W = span{u, v} in K/wp(K). Equality is by the spanned set, so
// every presentation of the same biquadratic extension compares equal.
class PlaneDescriptor {
  public:
    /// Throws DegeneratePlane unless u, v and u + v are all nonzero.
    PlaneDescriptor(WpCoset u, WpCoset v);

    const WpCoset &u() const noexcept { return u_; }
    const WpCoset &v() const noexcept { return v_; }
    /// The three nonzero elements, ascending.
    std::array<WpCoset, 3> elements() const;
    /// "{e1; e2; e3}" over the sorted elements.
    std::string key() const;

    friend bool operator==(const PlaneDescriptor &a, const PlaneDescriptor &b) {
        return a.elements() == b.elements();
    }

  private:
    WpCoset u_;
    WpCoset v_;
};

enum class BreakCase { case1, case21, case22 };

std::string to_string(BreakCase c);

class BreakData {
  public:
    /// Each factory throws DomainError for even or non-positive breaks, or
    /// t1 >= t2 in the third case.
    static BreakData case1(std::int64_t t);
    static BreakData case21(std::int64_t t);
    static BreakData case22(std::int64_t t1, std::int64_t t2);

    BreakCase kind() const noexcept { return kind_; }
    /// t for the first two cases, t1 for the third.
    std::int64_t t1() const noexcept { return t1_; }
    /// Only meaningful for case22.
    std::int64_t t2() const noexcept { return t2_; }
    /// [t] or [t1, t2].
    std::vector<std::int64_t> breaks() const;

    friend auto operator<=>(const BreakData &, const BreakData &) = default;
    friend bool operator==(const BreakData &, const BreakData &) = default;

  private:
    BreakData(BreakCase kind, std::int64_t t1, std::int64_t t2) : kind_(kind), t1_(t1), t2_(t2) {}

    BreakCase kind_;
    std::int64_t t1_;
    std::int64_t t2_;
};

std::string describe(const BreakData &bd);

enum class RamGroup { v4, c2, trivial };

std::string to_string(RamGroup g);
int group_order(RamGroup g);
/// dim(g / g^H) for g = so_3 and H the image of the group in J.
int coinvariant_dim(RamGroup g);

struct RamSegment {
    std::int64_t lo;
    std::optional<std::int64_t> hi; // nullopt: unbounded
    RamGroup group;

    friend bool operator==(const RamSegment &, const RamSegment &) = default;
};

// Lower-numbering filtration G_i, i >= -1, as contiguous segments.
struct RamFiltration {
    std::vector<RamSegment> segments;

    /// Throws DomainError when i is not covered.
    RamGroup at(std::int64_t i) const;
    /// Indices i with G_i != G_{i+1}.
    std::vector<std::int64_t> breaks() const;

    friend bool operator==(const RamFiltration &, const RamFiltration &) = default;
};

/// Throws DegeneratePlane (via the descriptor) or DomainError if the three
/// levels are inconsistent.
BreakData classify_plane(const PlaneDescriptor &w);

std::vector<std::int64_t> upper_breaks(const BreakData &bd);

/// Hasse-Herbrand psi: integral of (G^0 : G^v) from 0 to u. Extended by
/// psi(u) = u on [-1, 0]. Throws DomainError for u < -1.
Rational hasse_herbrand_psi(const BreakData &bd, const Rational &u);

RamFiltration lower_filtration(const BreakData &bd);

/// Closed forms 2(1+t), 3(t+1), 3 + 3 t1 + 2 t2.
std::int64_t conductor_closed_form(const BreakData &bd);

/// sum_{i >= 0} dim(g / g^{D_i}) / [D_0 : D_i], evaluated segment by
/// segment. Throws DomainError if the sum diverges.
Rational conductor_from_filtration(const RamFiltration &filt);

enum class ConductorSource { closed_form, filtration };
enum class DegreeBase { two, q };

/// (1/4) (2/q) base^{alpha/2}. Throws NonIntegralExponent when the power
/// of two is fractional.
Rational formal_degree(const BreakData &bd, const FieldCtx &k,
                       ConductorSource source = ConductorSource::closed_form,
                       DegreeBase base = DegreeBase::two);

constexpr std::int64_t kMaxEnumerationDim = 24;

/// Number of 2-dimensional subspaces of F_2^d.
std::uint64_t gaussian_binomial_2(std::int64_t d);

// Lazily yields every plane of V_nmax exactly once, ordered by the sorted
// triple of vn_basis coordinate masks.
class PlaneStream {
  public:
    /// Throws BudgetExceeded when dim V_nmax exceeds kMaxEnumerationDim.
    PlaneStream(FieldPtr field, std::int64_t nmax);

    std::optional<PlaneDescriptor> next();
    std::int64_t dim() const noexcept { return dim_; }
    std::uint64_t expected_count() const { return gaussian_binomial_2(dim_); }

  private:
    FieldPtr field_;
    std::vector<WpCoset> basis_;
    std::int64_t dim_;
    std::uint64_t limit_;
    std::uint64_t u_ = 1;
    std::uint64_t v_ = 1;
};

PlaneStream enumerate_planes(const FieldPtr &field, std::int64_t nmax);

std::map<BreakData, std::uint64_t> count_by_breaks(const FieldPtr &field, std::int64_t nmax);

} // namespace asl
