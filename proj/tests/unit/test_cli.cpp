#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "hecat/cli/cli.hpp"

using namespace hecat;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("kl column") {
    Run r = run({"kl", "--type", "A3", "--w", "s2 s1 s3 s2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("s2,s2 s1 s3 s2,q + 1") != std::string::npos);
    CHECK(r.out.find("e,s2 s1 s3 s2,q + 1") != std::string::npos);
    CHECK(r.out.find("s1,s2 s1 s3 s2,1\n") != std::string::npos);

    Run j = run({"--format", "json", "kl", "--type", "A3", "--w", "s2 s1 s3 s2"});
    CHECK(j.code == 0);
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["P"]["s2"] == "q + 1");
}

TEST_CASE("exit codes") {
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"kl", "--type", "A3"}).code == 1);              // missing --w
    CHECK(run({"kl", "--type", "Q7", "--w", "s1"}).code == 1);  // bad Cartan type
    CHECK(run({"kl", "--type", "A2", "--w", "s9"}).code == 1);
    CHECK(run({"--format", "xml", "weyl", "--type", "A2"}).code == 1);
    CHECK(run({"accept", "bogus"}).code == 1);
    CHECK(run({"oracle", "compare", "--group", "GL7", "--primes", "2"}).code == 1);
    CHECK(run({"oracle", "compare", "--group", "GL2", "--primes", "6"}).code == 1);
    CHECK(run({"orbit", "module", "--builtin", "sl2-torus", "--fit", "3,5", "--validate", "2"}).code == 1);
    CHECK(run({"orbit", "module", "--fit", "3,5", "--validate", "7"}).code == 1);  // no datum
    CHECK(run({"soergel", "bs", "--type", "A2", "--word", "s1", "--report", "volume"}).code == 1);
    CHECK(run({"--help"}).code == 0);

    // mathematical failures
    Run nb = run({"braid", "check", "--type", "A2", "--lhs", "s1 s2", "--rhs", "s2 s1"});
    CHECK(nb.code == 2);
    auto doc = nlohmann::json::parse(nb.out);
    CHECK(doc["equivalent"] == false);
    CHECK(doc.contains("lhs_minimal"));
    CHECK(doc.contains("rhs_minimal"));
    CHECK(nb.err.find("NotEquivalent") != std::string::npos);

    Run bad = run({"orbit", "module", "--builtin", "sl2-torus", "--fit", "3,5", "--validate", "7", "--degree-bound", "0"});
    CHECK(bad.code == 2);
    Run invalid = run({"orbit", "validate", "--datum",
                       R"({"type":"A1","orbits":[{"id":"a","dim":0},{"id":"b","dim":0}],)"
                       R"("cases":{"s1":{"a":{"label":"U","star":"b","aux":["a"]},)"
                       R"("b":{"label":"U","star":"b","aux":["a"]}}},)"
                       R"("closed":["a"]})"});
    CHECK(invalid.code == 2);
    CHECK(invalid.err.find("ValidationFailed") != std::string::npos);
}

TEST_CASE("braid check emits a certificate") {
    Run r = run({"braid", "check", "--type", "A2", "--lhs", "s1 s2 s1", "--rhs", "s2 s1 s2"});
    REQUIRE(r.code == 0);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["equivalent"] == true);
    CHECK(doc.contains("certificate"));
    CHECK(doc["lhs"] == "s1 s2 s1");

    Run inv = run({"braid", "invariant", "--type", "A2", "--word", "s1 s1^-1"});
    CHECK(inv.code == 0);
    CHECK(inv.out == "minimal complex [0: R]\nk0 T(e)\n");
}

TEST_CASE("oracle comparison") {
    Run r = run({"oracle", "compare", "--group", "GL2", "--primes", "2,3"});
    CHECK(r.code == 0);
    CHECK(r.out == "all |W|² products match\n");
    Run c = run({"oracle", "convolve", "--group", "GL2", "--q", "3", "--x", "s1", "--y", "s1"});
    CHECK(c.out == "e 3\ns1 2\n");
}

TEST_CASE("other subcommands") {
    CHECK(run({"weyl", "--type", "B2"}).out == "type B2\nrank 2\norder 8\nlongest s1 s2 s1 s2\n");
    CHECK(run({"weyl", "--type", "A2", "--w", "s1 s2"}).out == "element s1 s2\nlength 2\ninverse s2 s1\n");
    CHECK(run({"hecke", "mul", "--type", "A1", "--x", "s1", "--y", "s1"}).out == "q*T(e) + (q - 1)*T(s1)\n");
    CHECK(run({"hecke", "bar", "--type", "A1", "--w", "s1"}).out == "(-1 + q^-1)*T(e) + q^-1*T(s1)\n");
    CHECK(run({"soergel", "bs", "--type", "A2", "--word", "s1 s1", "--report", "rank"}).out ==
          "rank v^2 + 2 + v^-2\n");
    CHECK(run({"soergel", "hom", "--type", "A1", "--from", "e", "--to", "s1", "--degree", "1"}).out ==
          "dim Hom^1 = 1 (cutoff 2)\n");
    CHECK(run({"soergel", "coinvariant", "--type", "A1"}).out == "v^2 + 1\n");

    Run s = run({"--format", "csv", "schur", "--type", "A2", "--I", "{s1}", "--J", "{}", "--K", "{s1}"});
    CHECK(s.code == 0);
    CHECK(s.out.rfind("z1,z2,z3,coefficient\n", 0) == 0);

    Run o = run({"--format", "csv", "orbit", "module", "--builtin", "sl2-torus", "--fit", "3,5", "--validate", "7",
                 "--report", "action"});
    CHECK(o.code == 0);
    CHECK(o.out.find("s1,v2,v2,q - 2\n") != std::string::npos);
    Run v = run({"orbit", "validate", "--builtin", "gl3-block"});
    CHECK(v.code == 0);
    CHECK(v.out == "valid: 6 orbits of type A2\n");
}

TEST_CASE("deterministic output and json round trips") {
    std::vector<std::string> args = {"--format", "json", "orbit", "module", "--builtin", "sl2-torus",
                                     "--fit", "3,5", "--validate", "7", "--characters"};
    Run a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto doc = nlohmann::json::parse(a.out);
    CHECK(nlohmann::json::parse(doc.dump()) == doc);
    CHECK(doc.contains("action"));
    CHECK(doc.contains("klv"));

    Run t1 = run({"--format", "json", "schur", "--type", "A2", "--I", "{}", "--J", "{s1}", "--K", "{}"});
    Run t2 = run({"--format", "json", "schur", "--type", "A2", "--I", "{}", "--J", "{s1}", "--K", "{}"});
    CHECK(t1.out == t2.out);
    CHECK(nlohmann::json::parse(t1.out).dump(2) + "\n" == t1.out);

    Run acc1 = run({"--format", "json", "accept", "fast", "--seed", "3"});
    Run acc2 = run({"--format", "json", "accept", "fast", "--seed", "3"});
    CHECK(acc1.code == 0);
    CHECK(acc1.out == acc2.out);
    auto summary = nlohmann::json::parse(acc1.out);
    CHECK(summary["criteria"].size() == 7);
    CHECK(summary["pass"] == true);
}
