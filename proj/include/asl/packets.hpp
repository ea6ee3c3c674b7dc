#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "asl/ramify.hpp"
#include "asl/wpquot.hpp"

namespace asl {

// Representations, points and parameters are modelled as labels only.

// A point s = [T, chi] of the principal-series Bernstein spectrum, up to the
// data that matters here: chi trivial, chi quadratic (given by its coset), or
// chi^2 != 1 (an opaque tag).
class BernsteinPointDesc {
  public:
    enum class Kind { trivial, quadratic, nonquadratic };

    /// The field fixes a0, which labels the -1 fiber of the s_0 component.
    static BernsteinPointDesc trivial(FieldPtr field);
    /// Throws ZeroCoset for the zero coset.
    static BernsteinPointDesc quadratic(WpCoset coset);
    static BernsteinPointDesc nonquadratic(std::string tag);

    Kind kind() const noexcept { return kind_; }
    /// Present iff kind() == quadratic.
    const std::optional<WpCoset> &coset() const noexcept { return coset_; }
    const std::string &tag() const noexcept { return tag_; }
    /// Null for nonquadratic points.
    const FieldPtr &field() const noexcept { return field_; }

  private:
    BernsteinPointDesc(Kind kind, FieldPtr field, std::optional<WpCoset> coset, std::string tag)
        : kind_(kind), field_(std::move(field)), coset_(std::move(coset)), tag_(std::move(tag)) {}

    Kind kind_;
    FieldPtr field_;
    std::optional<WpCoset> coset_;
    std::string tag_;
};

/// Labels of the four characters of J = Z/2 x Z/2.
inline const std::vector<std::string> &klein_characters() {
    static const std::vector<std::string> labels{"(0,0)", "(0,1)", "(1,0)", "(1,1)"};
    return labels;
}

// An enhanced parameter phi(rho).
class EnhancedParam {
  public:
    struct Principal {};
    struct TrivialParam {};
    using Parameter = std::variant<Principal, TrivialParam, WpCoset, PlaneDescriptor>;

    /// Throws DomainError when rho is not a character of S_phi:
    /// {triv} for phi_0 and phi_1, {triv, rho} for a quadratic
    /// parameter, klein_characters() for a biquadratic one.
    EnhancedParam(Parameter parameter, std::string enhancement);

    const Parameter &parameter() const noexcept { return parameter_; }
    const std::string &enhancement() const noexcept { return enhancement_; }
    /// |S_phi|.
    std::size_t component_group_order() const;
    std::string label() const;

  private:
    Parameter parameter_;
    std::string enhancement_;
};

struct PacketDescriptor {
    std::vector<std::string> constituents;
    std::vector<Rational> degrees; // supercuspidal packets only
    std::variant<BernsteinPointDesc, PlaneDescriptor> origin;
};

enum class Position { plus_one, minus_one };

std::string to_string(Position p);

struct SpecialPoint {
    Position position;
    std::vector<std::string> fiber;
    /// The tempered constituent of this fiber is an isolated point of the
    /// tempered dual (the Steinberg point).
    bool isolated = false;
    std::vector<bool> tempered;
    /// Name the tempered-dual picture gives this double point.
    std::string diagram_label;
};

struct ComponentShape {
    enum class Topology { free_circle, folded_arc };

    Topology topology;
    std::vector<SpecialPoint> special_points;

    /// Fiber over +1, -1, or (nullopt) a generic point of the circle.
    std::vector<std::string> fiber_at(std::optional<Position> where) const;
};

/// (T // W)_2 for W = Z/2 acting on the unit circle by z -> 1/z.
ComponentShape extended_quotient_circle();

/// Label helpers shared by the triangle, components and the diagram.
std::string packet_name(const WpCoset &a);
std::vector<std::string> principal_constituents(const WpCoset &a);

/// The L-packet {pi_a^+, pi_a^-} attached to the quadratic character chi_a.
PacketDescriptor principal_packet(const WpCoset &a);

struct Triangle {
    std::vector<std::string> eq_points;
    std::vector<std::string> irreps;
    std::vector<std::string> params;
    std::map<std::string, std::string> points_to_irreps;
    std::map<std::string, std::string> irreps_to_params;
    std::map<std::string, std::string> points_to_params;

    /// irreps_to_params o points_to_irreps == points_to_params, all three
    /// bijective.
    bool commutes() const;
};

Triangle triangle(const BernsteinPointDesc &s);

ComponentShape component_of(const BernsteinPointDesc &s);

/// Four constituents, one per character of J, each with the default
/// formal degree of the plane's break data.
PacketDescriptor supercuspidal_packet(const PlaneDescriptor &w, const FieldCtx &k);

struct BreakTally {
    BreakData breaks;
    std::uint64_t count;
    std::int64_t conductor_closed_form;
    Rational conductor_filtration;
    Rational formal_degree;
};

struct PrincipalArc {
    /// Empty for the s_0 arc.
    std::optional<WpCoset> plus_coset;
    WpCoset minus_coset;
};

struct SpectrumCensus {
    int f = 0;
    std::uint32_t modulus = 0;
    std::string modulus_text;
    std::int64_t nmax = 0;
    std::int64_t dim = 0;
    std::int64_t dim_prime_field = 0;
    std::uint64_t total_planes = 0;
    std::vector<BreakTally> tallies;
    std::uint64_t quadratic_cosets = 0;
    std::uint64_t principal_arcs = 0;
    std::uint64_t double_points = 0;
    std::uint64_t supercuspidal_isolated_points = 0;
    std::vector<PrincipalArc> arcs;
};

/// Throws BudgetExceeded when dim V_nmax exceeds kMaxEnumerationDim.
SpectrumCensus spectrum_census(const FieldPtr &field, std::int64_t nmax);

/// Deterministic DOT graph of the principal-series part of the tempered dual.
std::string render_spectrum(const SpectrumCensus &census);

} // namespace asl
