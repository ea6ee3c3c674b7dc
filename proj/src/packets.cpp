#include "asl/packets.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

#include "asl/errors.hpp"

namespace asl {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string point_label(const std::string &where, const std::string &rho) { return "(" + where + "," + rho + ")"; }

std::string dot_escape(const std::string &s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    return out;
}

} // namespace

BernsteinPointDesc BernsteinPointDesc::trivial(FieldPtr field) {
    return {Kind::trivial, std::move(field), std::nullopt, {}};
}

BernsteinPointDesc BernsteinPointDesc::quadratic(WpCoset coset) {
    if (coset.is_zero()) {
        throw ZeroCoset("a quadratic Bernstein point needs a nonzero coset");
    }
    FieldPtr field = coset.field();
    return {Kind::quadratic, std::move(field), std::move(coset), {}};
}

BernsteinPointDesc BernsteinPointDesc::nonquadratic(std::string tag) {
    return {Kind::nonquadratic, nullptr, std::nullopt, std::move(tag)};
}

EnhancedParam::EnhancedParam(Parameter parameter, std::string enhancement)
    : parameter_(std::move(parameter)), enhancement_(std::move(enhancement)) {
    const bool valid = std::visit(
        overloaded{
            [&](const Principal &) { return enhancement_ == "triv"; },
            [&](const TrivialParam &) { return enhancement_ == "triv"; },
            [&](const WpCoset &a) {
                if (a.is_zero()) {
                    throw ZeroCoset("quadratic parameter of the zero coset");
                }
                return enhancement_ == "triv" || enhancement_ == "rho";
            },
            [&](const PlaneDescriptor &) {
                const auto &labels = klein_characters();
                return std::find(labels.begin(), labels.end(), enhancement_) != labels.end();
            },
        },
        parameter_);
    if (!valid) {
        throw DomainError("'" + enhancement_ + "' is not a character of the component group");
    }
}

std::size_t EnhancedParam::component_group_order() const {
    return std::visit(overloaded{
                          [](const Principal &) -> std::size_t { return 1; },
                          [](const TrivialParam &) -> std::size_t { return 1; },
                          [](const WpCoset &) -> std::size_t { return 2; },
                          [](const PlaneDescriptor &) -> std::size_t { return 4; },
                      },
                      parameter_);
}

std::string EnhancedParam::label() const {
    const std::string head = std::visit(overloaded{
                                            [](const Principal &) { return std::string("phi0"); },
                                            [](const TrivialParam &) { return std::string("phi1"); },
                                            [](const WpCoset &a) { return "phi[" + render(a) + "]"; },
                                            [](const PlaneDescriptor &w) { return "phi" + w.key(); },
                                        },
                                        parameter_);
    return head + "(" + enhancement_ + ")";
}

std::string to_string(Position p) { return p == Position::plus_one ? "+1" : "-1"; }

std::vector<std::string> ComponentShape::fiber_at(std::optional<Position> where) const {
    if (where) {
        for (const auto &sp : special_points) {
            if (sp.position == *where) {
                return sp.fiber;
            }
        }
    }
    return {"(z,triv)"};
}

ComponentShape extended_quotient_circle() {
    // The W-fixed points z = 1 and z = -1 carry both characters of the
    // isotropy group; every other orbit {z, 1/z} carries one point.
    ComponentShape shape{ComponentShape::Topology::folded_arc, {}};
    shape.special_points.push_back(
        {Position::plus_one, {point_label("1", "triv"), point_label("1", "rho")}, false, {true, true}, "(1)"});
    shape.special_points.push_back(
        {Position::minus_one, {point_label("-1", "triv"), point_label("-1", "rho")}, false, {true, true}, "(-1)"});
    return shape;
}

std::string packet_name(const WpCoset &a) { return "pi[" + render(a) + "]"; }

std::vector<std::string> principal_constituents(const WpCoset &a) {
    const std::string name = packet_name(a);
    return {name + "+", name + "-"};
}

PacketDescriptor principal_packet(const WpCoset &a) {
    return {principal_constituents(a), {}, BernsteinPointDesc::quadratic(a)};
}

bool Triangle::commutes() const {
    const auto bijective = [](const std::map<std::string, std::string> &m, const std::vector<std::string> &from,
                              const std::vector<std::string> &to) {
        if (m.size() != from.size() || from.size() != to.size()) {
            return false;
        }
        std::set<std::string> image;
        for (const auto &x : from) {
            auto it = m.find(x);
            if (it == m.end() || std::find(to.begin(), to.end(), it->second) == to.end()) {
                return false;
            }
            image.insert(it->second);
        }
        return image.size() == to.size();
    };
    if (!bijective(points_to_irreps, eq_points, irreps) || !bijective(irreps_to_params, irreps, params) ||
        !bijective(points_to_params, eq_points, params)) {
        return false;
    }
    return std::all_of(eq_points.begin(), eq_points.end(), [&](const std::string &p) {
        return irreps_to_params.at(points_to_irreps.at(p)) == points_to_params.at(p);
    });
}

Triangle triangle(const BernsteinPointDesc &s) {
    Triangle out;
    switch (s.kind()) {
    case BernsteinPointDesc::Kind::quadratic: {
        const WpCoset &a = *s.coset();
        const FieldCtx &k = a.ctx();
        // chi(varpi) for chi = chi_a, evaluated through the symbol.
        const LaurentSeries uniformizer = LaurentSeries::monomial(a.field(), k.one(), 1);
        const std::string where = quad_char(a)(uniformizer) == 1 ? "1" : "-1";
        const auto irreps = principal_constituents(a);
        const std::vector<std::string> rhos{"triv", "rho"};
        for (std::size_t i = 0; i < 2; ++i) {
            const std::string point = point_label(where, rhos[i]);
            const std::string param = EnhancedParam(a, rhos[i]).label();
            out.eq_points.push_back(point);
            out.irreps.push_back(irreps[i]);
            out.params.push_back(param);
            out.points_to_irreps[point] = irreps[i];
            out.irreps_to_params[irreps[i]] = param;
            out.points_to_params[point] = param;
        }
        break;
    }
    case BernsteinPointDesc::Kind::trivial: {
        const std::string steinberg_param = EnhancedParam(EnhancedParam::Principal{}, "triv").label();
        const std::string trivial_param = EnhancedParam(EnhancedParam::TrivialParam{}, "triv").label();
        out.eq_points = {point_label("1", "triv"), point_label("1", "rho")};
        out.irreps = {"St", "1_G"};
        out.params = {steinberg_param, trivial_param};
        out.points_to_irreps = {{point_label("1", "triv"), "1_G"}, {point_label("1", "rho"), "St"}};
        out.irreps_to_params = {{"St", steinberg_param}, {"1_G", trivial_param}};
        out.points_to_params = {{point_label("1", "triv"), trivial_param}, {point_label("1", "rho"), steinberg_param}};
        break;
    }
    case BernsteinPointDesc::Kind::nonquadratic: {
        const std::string point = point_label("psi(w)[" + s.tag() + "]", "triv");
        const std::string irrep = "Ind pi[" + s.tag() + "]";
        const std::string param = "phi[" + s.tag() + "]";
        out.eq_points = {point};
        out.irreps = {irrep};
        out.params = {param};
        out.points_to_irreps = {{point, irrep}};
        out.irreps_to_params = {{irrep, param}};
        out.points_to_params = {{point, param}};
        break;
    }
    }
    return out;
}

ComponentShape component_of(const BernsteinPointDesc &s) {
    switch (s.kind()) {
    case BernsteinPointDesc::Kind::nonquadratic:
        return {ComponentShape::Topology::free_circle, {}};
    case BernsteinPointDesc::Kind::quadratic: {
        const WpCoset &a = *s.coset();
        // [T, eps]_G is the same component as [T, 1]_G.
        if (coset_level(a).kind == CosetLevel::Kind::unramified) {
            return component_of(BernsteinPointDesc::trivial(a.field()));
        }
        const WpCoset twisted = a + WpCoset::unramified(a.field());
        ComponentShape shape{ComponentShape::Topology::folded_arc, {}};
        shape.special_points.push_back(
            {Position::plus_one, principal_constituents(a), false, {true, true}, packet_name(a)});
        shape.special_points.push_back(
            {Position::minus_one, principal_constituents(twisted), false, {true, true}, packet_name(twisted)});
        return shape;
    }
    case BernsteinPointDesc::Kind::trivial:
        break;
    }
    const WpCoset unramified = WpCoset::unramified(s.field());
    ComponentShape shape{ComponentShape::Topology::folded_arc, {}};
    // The trivial representation sits in the fiber but is not tempered; the
    // Steinberg point is isolated.
    shape.special_points.push_back({Position::plus_one, {"St", "1_G"}, true, {true, false}, "pi_1"});
    shape.special_points.push_back(
        {Position::minus_one, principal_constituents(unramified), false, {true, true}, packet_name(unramified)});
    return shape;
}

PacketDescriptor supercuspidal_packet(const PlaneDescriptor &w, const FieldCtx &k) {
    const Rational degree = formal_degree(classify_plane(w), k);
    PacketDescriptor out{{}, {}, w};
    for (const auto &rho : klein_characters()) {
        out.constituents.push_back("pi" + w.key() + rho);
        out.degrees.push_back(degree);
    }
    return out;
}

SpectrumCensus spectrum_census(const FieldPtr &field, std::int64_t nmax) {
    SpectrumCensus census;
    census.f = field->degree();
    census.modulus = field->modulus();
    census.modulus_text = field->modulus_string();
    census.nmax = nmax;
    census.dim = filtration_dim(nmax, *field);
    census.dim_prime_field = filtration_dim_prime_field(nmax);

    for (const auto &[bd, count] : count_by_breaks(field, nmax)) {
        census.tallies.push_back(BreakTally{bd, count, conductor_closed_form(bd),
                                            conductor_from_filtration(lower_filtration(bd)),
                                            formal_degree(bd, *field)});
        census.total_planes += count;
    }

    const auto basis = vn_basis(nmax, field);
    const WpCoset unramified = WpCoset::unramified(field);
    census.arcs.push_back(PrincipalArc{std::nullopt, unramified});
    census.double_points = 1;
    const std::uint64_t limit = std::uint64_t{1} << census.dim;
    for (std::uint64_t mask = 1; mask < limit; ++mask) {
        ++census.quadratic_cosets;
        // Ramified cosets pair up as {a, a + a0}; bit 0 is the a0 coordinate.
        if ((mask & 1U) == 0) {
            const WpCoset a = coset_from_mask(basis, mask);
            census.arcs.push_back(PrincipalArc{a, a + unramified});
            census.double_points += 2;
        }
    }
    census.principal_arcs = census.arcs.size();
    census.supercuspidal_isolated_points = 4 * census.total_planes;
    return census;
}

std::string render_spectrum(const SpectrumCensus &census) {
    std::ostringstream out;
    out << "graph spectrum {\n";
    out << "  // f=" << census.f << " modulus=" << census.modulus_text << " nmax=" << census.nmax << "\n";
    out << "  // supercuspidal packets: " << census.total_planes << " (" << census.supercuspidal_isolated_points
        << " isolated points)\n";
    out << "  node [shape=point];\n";
    for (std::size_t i = 0; i < census.arcs.size(); ++i) {
        const auto &arc = census.arcs[i];
        const std::string id = "arc" + std::to_string(i);
        out << "  subgraph cluster_" << id << " {\n";
        if (arc.plus_coset) {
            out << "    " << id << "_plus [label=\"" << dot_escape(packet_name(*arc.plus_coset))
                << "\", position=\"+1\", doubled=true, peripheries=2];\n";
        } else {
            out << "    " << id << "_plus [label=\"pi_1\", position=\"+1\", fiber=\"St,1_G\"];\n";
            out << "    steinberg [label=\"St\", isolated=true, shape=doublecircle];\n";
        }
        out << "    " << id << "_minus [label=\"" << dot_escape(packet_name(arc.minus_coset))
            << "\", position=\"-1\", doubled=true, peripheries=2];\n";
        out << "    " << id << "_plus -- " << id << "_minus;\n";
        out << "  }\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace asl
