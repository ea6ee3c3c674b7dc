#include "asl/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>

#include <CLI11.hpp>

#include "asl/errors.hpp"
#include "asl/parse.hpp"

namespace asl {

namespace {

using Json = nlohmann::ordered_json;

// Integers as JSON numbers when they fit in 2^53, otherwise decimal strings.
Json exact_number(const Rational &r) {
    if (boost::multiprecision::denominator(r) == 1) {
        const BigInt n = boost::multiprecision::numerator(r);
        const BigInt limit = BigInt(1) << 53;
        if (n < limit && n > -limit) {
            return static_cast<std::int64_t>(n);
        }
    }
    return to_string(r);
}

Json field_json(const FieldCtx &k) {
    Json j;
    j["f"] = k.degree();
    j["modulus"] = k.modulus_string();
    return j;
}

Json level_json(const CosetLevel &level) {
    Json j;
    switch (level.kind) {
    case CosetLevel::Kind::zero:
        j["kind"] = "zero";
        break;
    case CosetLevel::Kind::unramified:
        j["kind"] = "unramified";
        break;
    case CosetLevel::Kind::ramified:
        j["kind"] = "ramified";
        j["t"] = level.t;
        break;
    }
    return j;
}

Json filtration_json(const RamFiltration &filt) {
    Json segments = Json::array();
    for (const auto &s : filt.segments) {
        Json seg;
        seg["lo"] = s.lo;
        seg["hi"] = s.hi ? Json(*s.hi) : Json(nullptr);
        seg["group"] = to_string(s.group);
        segments.push_back(seg);
    }
    return segments;
}

Json shape_json(const ComponentShape &shape) {
    Json j;
    j["topology"] = shape.topology == ComponentShape::Topology::free_circle ? "free_circle" : "folded_arc";
    Json points = Json::array();
    for (const auto &sp : shape.special_points) {
        Json p;
        p["position"] = to_string(sp.position);
        p["fiber"] = sp.fiber;
        p["isolated"] = sp.isolated;
        p["tempered"] = sp.tempered;
        p["diagram_label"] = sp.diagram_label;
        points.push_back(p);
    }
    j["special_points"] = points;
    return j;
}

struct Session {
    RunConfig config;
    FieldPtr field;

    LaurentSeries series(const std::string &text) const { return parse_series(text, field, config.precision); }
    WpCoset coset(const std::string &text) const { return reduce_mod_wp(series(text)); }
};

bool wants(const RunConfig &config, OutputFormat format, OutputFormat fallback) {
    return (config.output == OutputFormat::automatic ? fallback : config.output) == format;
}

int cmd_reduce(const Session &s, const std::string &expr, std::ostream &out) {
    const LaurentSeries a = s.series(expr);
    const Reduction r = reduce_mod_wp_with_witness(a);
    std::string verdict;
    if (s.config.witness) {
        const bool ok = wp_apply(r.witness.total()).agrees_with(a + lift(r.coset));
        verdict = ok ? "verified" : "failed";
    }
    if (wants(s.config, OutputFormat::json, OutputFormat::text)) {
        Json j;
        j["input"] = expr;
        j["coset"] = render(r.coset);
        j["level"] = level_json(coset_level(r.coset));
        if (s.config.witness) {
            j["witness"] = verdict;
        }
        out << j.dump(2) << "\n";
    } else {
        out << render(r.coset) << "\n";
        if (s.config.witness) {
            out << "witness: " << verdict << "\n";
        }
    }
    return verdict == "failed" ? kExitFailure : kExitOk;
}

int cmd_symbol(const Session &s, const std::string &a_text, const std::string &b_text, std::ostream &out) {
    const WpCoset a = s.coset(a_text);
    const LaurentSeries b = s.series(b_text);
    const int symbol = as_symbol(a, b);
    const int character = symbol == 0 ? 1 : -1;
    if (wants(s.config, OutputFormat::json, OutputFormat::text)) {
        Json j;
        j["a"] = render(a);
        j["b"] = b_text;
        j["symbol"] = symbol;
        j["character"] = character;
        out << j.dump(2) << "\n";
    } else {
        out << "[a,b) = " << symbol << "\n";
        out << "chi_a(b) = " << (character > 0 ? "+1" : "-1") << "\n";
    }
    return kExitOk;
}

int cmd_classify(const Session &s, const std::string &a_text, const std::string &b_text, std::ostream &out) {
    const PlaneDescriptor w(s.coset(a_text), s.coset(b_text));
    const Json j = classify_json(w, *s.field);
    if (wants(s.config, OutputFormat::text, OutputFormat::json)) {
        out << j["case"].get<std::string>() << " breaks=" << j["breaks"].dump()
            << " conductor_paper=" << j["conductor_paper"].dump()
            << " conductor_filtration=" << j["conductor_filtration"].dump()
            << " formal_degree=" << j["formal_degree"].get<std::string>() << "\n";
    } else {
        out << j.dump(2) << "\n";
    }
    return kExitOk;
}

int cmd_census(const Session &s, std::ostream &out) {
    const SpectrumCensus census = spectrum_census(s.field, s.config.nmax);
    if (wants(s.config, OutputFormat::dot, OutputFormat::json)) {
        out << render_spectrum(census);
        return kExitOk;
    }
    out << census_json(census).dump(2) << "\n";
    if (s.config.dot) {
        out << render_spectrum(census);
    }
    return kExitOk;
}

int cmd_spectrum(const Session &s, std::ostream &out) {
    const SpectrumCensus census = spectrum_census(s.field, s.config.nmax);
    if (wants(s.config, OutputFormat::json, OutputFormat::dot)) {
        out << census_json(census).dump(2) << "\n";
    } else {
        out << render_spectrum(census);
    }
    return kExitOk;
}

int cmd_triangle(const Session &s, const std::string &desc, std::ostream &out) {
    std::optional<BernsteinPointDesc> point;
    if (desc == "trivial") {
        point = BernsteinPointDesc::trivial(s.field);
    } else if (desc.rfind("nonquadratic", 0) == 0) {
        const auto colon = desc.find(':');
        point = BernsteinPointDesc::nonquadratic(colon == std::string::npos ? "chi" : desc.substr(colon + 1));
    } else {
        point = BernsteinPointDesc::quadratic(s.coset(desc));
    }
    out << triangle_json(*point).dump(2) << "\n";
    return kExitOk;
}

void add_common_options(CLI::App *cmd, RunConfig &config, std::string &modulus_text, std::string &output_text) {
    cmd->add_option("--f", config.f, "residue degree f, q = 2^f")->check(CLI::Range(1, FieldCtx::kMaxDegree));
    cmd->add_option("--modulus", modulus_text, "defining polynomial, e.g. g^4+g+1 or 0x13");
    cmd->add_option("--precision", config.precision, "absolute series precision")
        ->check(CLI::Range(std::int64_t{16}, std::int64_t{1} << 20));
    cmd->add_option("--nmax", config.nmax, "filtration level V_nmax")->check(CLI::NonNegativeNumber);
    cmd->add_option("--output", output_text, "json | dot | text")->check(CLI::IsMember({"json", "dot", "text"}));
    cmd->add_option("--seed", config.seed, "seed (unused by deterministic subcommands)");
}

} // namespace

Json census_json(const SpectrumCensus &census) {
    Json j;
    Json field;
    field["f"] = census.f;
    field["modulus"] = census.modulus_text;
    j["field"] = field;
    j["nmax"] = census.nmax;
    j["dim"] = census.dim;
    j["dim_paper_eq2"] = census.dim_prime_field;
    j["total_planes"] = census.total_planes;
    Json tallies = Json::array();
    for (const auto &t : census.tallies) {
        Json row;
        row["case"] = to_string(t.breaks.kind());
        row["breaks"] = t.breaks.breaks();
        row["count"] = t.count;
        row["conductor_paper"] = t.conductor_closed_form;
        row["conductor_filtration"] = exact_number(t.conductor_filtration);
        row["formal_degree"] = to_string(t.formal_degree);
        tallies.push_back(row);
    }
    j["tallies"] = tallies;
    Json spectrum;
    spectrum["quadratic_cosets"] = census.quadratic_cosets;
    spectrum["principal_arcs"] = census.principal_arcs;
    spectrum["double_points"] = census.double_points;
    spectrum["supercuspidal_isolated_points"] = census.supercuspidal_isolated_points;
    j["spectrum"] = spectrum;
    return j;
}

Json classify_json(const PlaneDescriptor &w, const FieldCtx &k) {
    const BreakData bd = classify_plane(w);
    const RamFiltration filt = lower_filtration(bd);
    Json j;
    j["field"] = field_json(k);
    Json plane = Json::array();
    for (const auto &e : w.elements()) {
        plane.push_back(render(e));
    }
    j["plane"] = plane;
    j["case"] = to_string(bd.kind());
    j["breaks"] = bd.breaks();
    j["upper_breaks"] = upper_breaks(bd);
    j["lower_breaks"] = filt.breaks();
    j["lower_filtration"] = filtration_json(filt);
    j["conductor_paper"] = conductor_closed_form(bd);
    j["conductor_filtration"] = exact_number(conductor_from_filtration(filt));
    j["formal_degree"] = to_string(formal_degree(bd, k));
    try {
        j["formal_degree_filtration"] = to_string(formal_degree(bd, k, ConductorSource::filtration));
    } catch (const NonIntegralExponent &) {
        j["formal_degree_filtration"] = nullptr;
    }
    j["packet_size"] = supercuspidal_packet(w, k).constituents.size();
    return j;
}

Json triangle_json(const BernsteinPointDesc &s) {
    const Triangle t = triangle(s);
    Json j;
    j["eq_points"] = t.eq_points;
    j["irreps"] = t.irreps;
    j["params"] = t.params;
    Json maps;
    maps["points_to_irreps"] = t.points_to_irreps;
    maps["irreps_to_params"] = t.irreps_to_params;
    maps["points_to_params"] = t.points_to_params;
    j["bijections"] = maps;
    j["commutes"] = t.commutes();
    j["component"] = shape_json(component_of(s));
    return j;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Artin-Schreier invariants of F_q((x)) in characteristic 2", "asl"};
    app.require_subcommand(1);

    RunConfig config;
    std::string modulus_text;
    std::string output_text;
    std::string first;
    std::string second;
    std::function<int(const Session &)> action;

    auto *reduce = app.add_subcommand("reduce", "canonical representative of a + wp(K)");
    add_common_options(reduce, config, modulus_text, output_text);
    reduce->add_flag("--witness", config.witness, "verify the wp-witness");
    reduce->add_option("expr", first, "series")->required();
    reduce->callback([&] { action = [&](const Session &s) { return cmd_reduce(s, first, out); }; });

    auto *symbol = app.add_subcommand("symbol", "Artin-Schreier symbol [a, b)");
    add_common_options(symbol, config, modulus_text, output_text);
    symbol->add_option("a", first, "series")->required();
    symbol->add_option("b", second, "nonzero series")->required();
    symbol->callback([&] { action = [&](const Session &s) { return cmd_symbol(s, first, second, out); }; });

    auto *classify = app.add_subcommand("classify", "break data of the plane span{a, b}");
    add_common_options(classify, config, modulus_text, output_text);
    classify->add_option("a", first, "series")->required();
    classify->add_option("b", second, "series")->required();
    classify->callback([&] { action = [&](const Session &s) { return cmd_classify(s, first, second, out); }; });

    auto *census = app.add_subcommand("census", "tally planes of V_nmax by break data");
    add_common_options(census, config, modulus_text, output_text);
    census->add_flag("--dot", config.dot, "append the spectrum diagram");
    census->callback([&] { action = [&](const Session &s) { return cmd_census(s, out); }; });

    auto *triangle = app.add_subcommand("triangle", "triangle of bijections at a Bernstein point");
    add_common_options(triangle, config, modulus_text, output_text);
    triangle->add_option("point", first, "trivial | nonquadratic[:tag] | series")->required();
    triangle->callback([&] { action = [&](const Session &s) { return cmd_triangle(s, first, out); }; });

    auto *spectrum = app.add_subcommand("spectrum", "principal-series tempered dual as DOT");
    add_common_options(spectrum, config, modulus_text, output_text);
    spectrum->callback([&] { action = [&](const Session &s) { return cmd_spectrum(s, out); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (!modulus_text.empty()) {
            config.modulus = parse_modulus(modulus_text);
        }
        if (output_text == "json") {
            config.output = OutputFormat::json;
        } else if (output_text == "dot") {
            config.output = OutputFormat::dot;
        } else if (output_text == "text") {
            config.output = OutputFormat::text;
        }
        Session session{config, FieldCtx::make(config.f, config.modulus)};
        return action(session);
    } catch (const ParseError &e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const PrecisionExhausted &e) {
        err << "precision exhausted: " << e.what() << "\n";
        return kExitPrecision;
    } catch (const DegeneratePlane &e) {
        err << "degenerate plane: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const BudgetExceeded &e) {
        err << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

} // namespace asl
