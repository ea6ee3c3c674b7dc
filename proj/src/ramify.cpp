#include "asl/ramify.hpp"

#include <algorithm>
#include <utility>

#include "asl/errors.hpp"

namespace asl {

namespace {

void require_odd_positive(std::int64_t t) {
    if (t <= 0 || t % 2 == 0) {
        throw DomainError("ramification breaks must be odd and positive, got " + std::to_string(t));
    }
}

// (G^0 : G^u) is constant on each interval (from, to]; the last is unbounded.
struct IndexStep {
    Rational from;
    std::optional<Rational> to;
    int index;
};

std::vector<IndexStep> index_table(const BreakData &bd) {
    const Rational t1(bd.t1());
    switch (bd.kind()) {
    case BreakCase::case1:
        return {{0, t1, 1}, {t1, std::nullopt, 2}};
    case BreakCase::case21:
        return {{0, t1, 1}, {t1, std::nullopt, 4}};
    case BreakCase::case22: {
        const Rational t2(bd.t2());
        return {{0, t1, 1}, {t1, t2, 2}, {t2, std::nullopt, 4}};
    }
    }
    throw DomainError("unknown break case");
}

} // namespace

std::string to_string(const Rational &r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

Rational pow2(std::int64_t e) {
    BigInt p = 1;
    p <<= static_cast<unsigned>(e < 0 ? -e : e);
    return e < 0 ? Rational(BigInt(1), p) : Rational(p);
}

PlaneDescriptor::PlaneDescriptor(WpCoset u, WpCoset v) : u_(std::move(u)), v_(std::move(v)) {
    if (u_.is_zero() || v_.is_zero() || (u_ + v_).is_zero()) {
        throw DegeneratePlane("basis " + render(u_) + ", " + render(v_) + " is F_2-dependent");
    }
}

std::array<WpCoset, 3> PlaneDescriptor::elements() const {
    std::array<WpCoset, 3> out{u_, v_, u_ + v_};
    std::sort(out.begin(), out.end());
    return out;
}

std::string PlaneDescriptor::key() const {
    const auto e = elements();
    return "{" + render(e[0]) + "; " + render(e[1]) + "; " + render(e[2]) + "}";
}

std::string to_string(BreakCase c) {
    switch (c) {
    case BreakCase::case1:
        return "Case1";
    case BreakCase::case21:
        return "Case21";
    case BreakCase::case22:
        return "Case22";
    }
    return "?";
}

BreakData BreakData::case1(std::int64_t t) {
    require_odd_positive(t);
    return {BreakCase::case1, t, 0};
}

BreakData BreakData::case21(std::int64_t t) {
    require_odd_positive(t);
    return {BreakCase::case21, t, 0};
}

BreakData BreakData::case22(std::int64_t t1, std::int64_t t2) {
    require_odd_positive(t1);
    require_odd_positive(t2);
    if (t1 >= t2) {
        throw DomainError("Case22 needs t1 < t2");
    }
    return {BreakCase::case22, t1, t2};
}

std::vector<std::int64_t> BreakData::breaks() const {
    if (kind_ == BreakCase::case22) {
        return {t1_, t2_};
    }
    return {t1_};
}

std::string describe(const BreakData &bd) {
    std::string out = to_string(bd.kind()) + "(";
    const auto b = bd.breaks();
    for (std::size_t i = 0; i < b.size(); ++i) {
        out += (i ? "," : "") + std::to_string(b[i]);
    }
    return out + ")";
}

std::string to_string(RamGroup g) {
    switch (g) {
    case RamGroup::v4:
        return "V4";
    case RamGroup::c2:
        return "C2";
    case RamGroup::trivial:
        return "Triv";
    }
    return "?";
}

int group_order(RamGroup g) {
    switch (g) {
    case RamGroup::v4:
        return 4;
    case RamGroup::c2:
        return 2;
    case RamGroup::trivial:
        return 1;
    }
    return 1;
}

int coinvariant_dim(RamGroup g) {
    // J fixes nothing in so_3; a half-turn fixes its axis.
    switch (g) {
    case RamGroup::v4:
        return 3;
    case RamGroup::c2:
        return 2;
    case RamGroup::trivial:
        return 0;
    }
    return 0;
}

RamGroup RamFiltration::at(std::int64_t i) const {
    for (const auto &s : segments) {
        if (i >= s.lo && (!s.hi || i <= *s.hi)) {
            return s.group;
        }
    }
    throw DomainError("ramification index " + std::to_string(i) + " not covered by the filtration");
}

std::vector<std::int64_t> RamFiltration::breaks() const {
    std::vector<std::int64_t> out;
    std::optional<RamGroup> previous;
    std::int64_t previous_hi = 0;
    for (const auto &s : segments) {
        if (s.hi && *s.hi < s.lo) {
            continue;
        }
        if (previous && *previous != s.group) {
            out.push_back(previous_hi);
        }
        previous = s.group;
        previous_hi = s.hi.value_or(0);
    }
    return out;
}

BreakData classify_plane(const PlaneDescriptor &w) {
    const WpCoset sum = w.u() + w.v();
    std::array<CosetLevel, 3> levels{coset_level(w.u()), coset_level(w.v()), coset_level(sum)};
    std::vector<std::int64_t> ramified;
    bool unramified = false;
    for (const auto &level : levels) {
        if (level.kind == CosetLevel::Kind::unramified) {
            unramified = true;
        } else if (level.kind == CosetLevel::Kind::ramified) {
            ramified.push_back(level.t);
        }
    }
    std::sort(ramified.begin(), ramified.end());
    if (unramified) {
        if (ramified.size() != 2 || ramified[0] != ramified[1]) {
            throw DomainError("plane through V_0 with unequal ramified breaks");
        }
        return BreakData::case1(ramified[0]);
    }
    if (ramified.size() != 3) {
        throw DegeneratePlane("plane with a zero element");
    }
    if (ramified[0] == ramified[2]) {
        return BreakData::case21(ramified[0]);
    }
    if (ramified[1] != ramified[2]) {
        throw DomainError("break multiset must be {t1, t2, t2}");
    }
    return BreakData::case22(ramified[0], ramified[2]);
}

std::vector<std::int64_t> upper_breaks(const BreakData &bd) {
    switch (bd.kind()) {
    case BreakCase::case1:
        return {-1, bd.t1()};
    case BreakCase::case21:
        return {bd.t1()};
    case BreakCase::case22:
        return {bd.t1(), bd.t2()};
    }
    return {};
}

Rational hasse_herbrand_psi(const BreakData &bd, const Rational &u) {
    if (u < -1) {
        throw DomainError("psi is defined for u >= -1");
    }
    if (u <= 0) {
        return u;
    }
    Rational acc = 0;
    for (const auto &step : index_table(bd)) {
        if (u <= step.from) {
            break;
        }
        const Rational end = step.to && *step.to < u ? *step.to : u;
        acc += (end - step.from) * step.index;
    }
    return acc;
}

RamFiltration lower_filtration(const BreakData &bd) {
    const std::int64_t t1 = bd.t1();
    switch (bd.kind()) {
    case BreakCase::case1:
        return {{{-1, -1, RamGroup::v4}, {0, t1, RamGroup::c2}, {t1 + 1, std::nullopt, RamGroup::trivial}}};
    case BreakCase::case21:
        return {{{-1, t1, RamGroup::v4}, {t1 + 1, std::nullopt, RamGroup::trivial}}};
    case BreakCase::case22: {
        const std::int64_t top = 2 * bd.t2() - t1;
        return {{{-1, t1, RamGroup::v4}, {t1 + 1, top, RamGroup::c2}, {top + 1, std::nullopt, RamGroup::trivial}}};
    }
    }
    return {};
}

std::int64_t conductor_closed_form(const BreakData &bd) {
    switch (bd.kind()) {
    case BreakCase::case1:
        return (1 + bd.t1()) * 2;
    case BreakCase::case21:
        return (bd.t1() + 1) * 3;
    case BreakCase::case22:
        return 3 + 3 * bd.t1() + 2 * bd.t2();
    }
    return 0;
}

Rational conductor_from_filtration(const RamFiltration &filt) {
    const int inertia_order = group_order(filt.at(0));
    Rational alpha = 0;
    for (const auto &s : filt.segments) {
        const std::int64_t lo = std::max<std::int64_t>(s.lo, 0);
        const int dim = coinvariant_dim(s.group);
        if (!s.hi) {
            if (dim != 0) {
                throw DomainError("conductor sum diverges: nontrivial group on an unbounded segment");
            }
            continue;
        }
        const std::int64_t count = *s.hi - lo + 1;
        if (count <= 0) {
            continue;
        }
        alpha += Rational(count * dim * group_order(s.group), inertia_order);
    }
    return alpha;
}

Rational formal_degree(const BreakData &bd, const FieldCtx &k, ConductorSource source, DegreeBase base) {
    const Rational alpha = source == ConductorSource::closed_form ? Rational(conductor_closed_form(bd))
                                                            : conductor_from_filtration(lower_filtration(bd));
    const int log2_base = base == DegreeBase::two ? 1 : k.degree();
    const Rational exponent = alpha * log2_base / 2;
    if (boost::multiprecision::denominator(exponent) != 1) {
        throw NonIntegralExponent("base^(alpha/2) is irrational for alpha = " + to_string(alpha));
    }
    const auto e = static_cast<std::int64_t>(boost::multiprecision::numerator(exponent));
    return pow2(e - k.degree() - 1);
}

std::uint64_t gaussian_binomial_2(std::int64_t d) {
    if (d < 2) {
        return 0;
    }
    const std::uint64_t a = (std::uint64_t{1} << d) - 1;
    const std::uint64_t b = (std::uint64_t{1} << (d - 1)) - 1;
    return a * b / 3;
}

PlaneStream::PlaneStream(FieldPtr field, std::int64_t nmax) : field_(std::move(field)) {
    dim_ = filtration_dim(nmax, *field_);
    if (dim_ > kMaxEnumerationDim) {
        throw BudgetExceeded("dim V_" + std::to_string(nmax) + " = " + std::to_string(dim_) +
                             " exceeds the enumeration budget of " + std::to_string(kMaxEnumerationDim));
    }
    basis_ = vn_basis(nmax, field_);
    limit_ = std::uint64_t{1} << dim_;
}

std::optional<PlaneDescriptor> PlaneStream::next() {
    // A plane {u, v, u^v} is emitted from its two smallest masks u < v < u^v.
    while (u_ < limit_) {
        ++v_;
        if (v_ >= limit_) {
            ++u_;
            v_ = u_;
            continue;
        }
        if (v_ < (u_ ^ v_)) {
            return PlaneDescriptor(coset_from_mask(basis_, u_), coset_from_mask(basis_, v_));
        }
    }
    return std::nullopt;
}

PlaneStream enumerate_planes(const FieldPtr &field, std::int64_t nmax) { return PlaneStream(field, nmax); }

std::map<BreakData, std::uint64_t> count_by_breaks(const FieldPtr &field, std::int64_t nmax) {
    std::map<BreakData, std::uint64_t> tally;
    PlaneStream stream(field, nmax);
    while (auto plane = stream.next()) {
        ++tally[classify_plane(*plane)];
    }
    return tally;
}

} // namespace asl
