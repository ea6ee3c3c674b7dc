#include <doctest.h>

#include <sstream>

#include "asl/cli.hpp"

using namespace asl;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Run &r) { return nlohmann::json::parse(r.out); }

} // namespace

TEST_CASE("reduce") {
    CHECK(run({"reduce", "--f", "1", "x^-4 + x^-2"}).out == "0\n");
    CHECK(run({"reduce", "--f", "1", "x^3"}).out == "0\n");
    CHECK(run({"reduce", "--f", "2", "g"}).out == "a0\n");
    CHECK(run({"reduce", "--f", "1", "x^-2"}).out == "x^-1\n");
    const auto w = run({"reduce", "--f", "2", "--witness", "g*x^-6 + x^-2 + g + x^5"});
    CHECK(w.code == 0);
    CHECK(w.out.find("witness: verified") != std::string::npos);
    const auto j = json_of(run({"reduce", "--f", "2", "--output", "json", "x^-3 + 1"}));
    CHECK(j["coset"] == "x^-3");
    CHECK(j["level"]["t"] == 3);
}

TEST_CASE("symbol") {
    CHECK(run({"symbol", "--f", "1", "1", "x"}).out == "[a,b) = 1\nchi_a(b) = -1\n");
    CHECK(run({"symbol", "--f", "1", "1", "x^2"}).out == "[a,b) = 0\nchi_a(b) = +1\n");
    CHECK(run({"symbol", "--f", "1", "x^2 + x", "x"}).out == "[a,b) = 0\nchi_a(b) = +1\n");
    CHECK(run({"symbol", "--f", "1", "1", "0"}).code == kExitFailure);
}

TEST_CASE("classify") {
    auto j = json_of(run({"classify", "--f", "1", "1", "x^-1"}));
    CHECK(j["case"] == "Case1");
    CHECK(j["breaks"] == nlohmann::json::array({1}));
    CHECK(j["formal_degree"] == "1");

    j = json_of(run({"classify", "--f", "1", "x^-1", "x^-3"}));
    CHECK(j["case"] == "Case22");
    CHECK(j["breaks"] == nlohmann::json::array({1, 3}));
    CHECK(j["conductor_paper"] == 12);
    CHECK(j["conductor_filtration"] == 10);
    CHECK(j["formal_degree"] == "16");
    CHECK(j["lower_breaks"] == nlohmann::json::array({1, 5}));

    j = json_of(run({"classify", "--f", "2", "x^-1", "g*x^-1"}));
    CHECK(j["case"] == "Case21");
    CHECK(j["breaks"] == nlohmann::json::array({1}));
}

TEST_CASE("census") {
    auto j = json_of(run({"census", "--f", "2", "--nmax", "1"}));
    bool found = false;
    for (const auto &t : j["tallies"]) {
        if (t["case"] == "Case1" && t["breaks"] == nlohmann::json::array({1})) {
            CHECK(t["count"] == 3);
            found = true;
        }
    }
    CHECK(found);

    j = json_of(run({"census", "--f", "1", "--nmax", "5"}));
    for (const auto &t : j["tallies"]) {
        CHECK(t["case"] != "Case21");
    }
    CHECK(j["dim"] == 4);
    CHECK(j["dim_paper_eq2"] == 4);

    j = json_of(run({"census", "--f", "1", "--nmax", "0"}));
    CHECK(j["total_planes"] == 0);
    CHECK(j["spectrum"]["principal_arcs"] == 1);

    std::vector<std::string> keys;
    const auto ordered = nlohmann::ordered_json::parse(run({"census", "--f", "2", "--nmax", "3"}).out);
    for (auto it = ordered.begin(); it != ordered.end(); ++it) {
        keys.push_back(it.key());
    }
    CHECK(keys == std::vector<std::string>{"field", "nmax", "dim", "dim_paper_eq2", "total_planes", "tallies", "spectrum"});

    const auto with_dot = run({"census", "--f", "1", "--nmax", "1", "--dot"});
    CHECK(with_dot.out.find("graph spectrum {") != std::string::npos);
}

TEST_CASE("spectrum and triangle") {
    const auto s = run({"spectrum", "--f", "1", "--nmax", "1"});
    CHECK(s.code == 0);
    CHECK(s.out.rfind("graph spectrum {", 0) == 0);
    CHECK(run({"spectrum", "--f", "1", "--nmax", "1"}).out == s.out);

    auto t = json_of(run({"triangle", "--f", "1", "trivial"}));
    CHECK(t["commutes"] == true);
    CHECK(t["irreps"] == nlohmann::json::array({"St", "1_G"}));
    t = json_of(run({"triangle", "nonquadratic:chi"}));
    CHECK(t["eq_points"].size() == 1);
    t = json_of(run({"triangle", "--f", "2", "x^-1"}));
    CHECK(t["irreps"].size() == 2);
    CHECK(t["component"]["topology"] == "folded_arc");
}

TEST_CASE("exit codes") {
    CHECK(run({"reduce", "x^^2"}).code == kExitParse);
    CHECK(run({"reduce", "bogus"}).code == kExitParse);
    CHECK(run({"reduce", "--modulus", "g^2+x", "x"}).code == kExitParse);
    CHECK(run({"frobnicate"}).code == kExitParse);
    CHECK(run({"reduce", "--precision", "8", "x"}).code == kExitParse);
    CHECK(run({"reduce", "--precision", "16", "(1+x)^-1 * x^-20"}).code == kExitPrecision);
    CHECK(run({"classify", "x^-1", "x^-1 + x^4"}).code == kExitDegenerate);
    CHECK(run({"census", "--f", "4", "--nmax", "13"}).code == kExitBudget);
    CHECK(run({"reduce", "--f", "4", "--modulus", "0x15", "x"}).code == kExitFailure);
    CHECK(run({"reduce", "--f", "4", "--modulus", "0x19", "g*x^-2", "--seed", "7"}).code == kExitOk);
}
