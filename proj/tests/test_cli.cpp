#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "uqaw/json_io.hpp"
#include "uqaw/uq.hpp"

using namespace uqaw;

namespace {

struct RunResult {
    int code;
    std::string out, err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("normalize output and round-trip") {
    RunResult r = run({"normalize", "--algebra", "uq", "E*F"});
    CHECK(r.code == 0);
    CHECK(r.out == "F*E + (1/(q - q^-1))*K + (-1/(q - q^-1))*K^-1\n");

    // output re-parses to the identical element
    std::string text = r.out.substr(0, r.out.size() - 1);
    CHECK(u_normal_form(text) == u_normal_form("E*F"));

    // byte-identical repeat
    RunResult again = run({"normalize", "--algebra", "uq", "E*F"});
    CHECK(again.out == r.out);

    // json form round-trips
    RunResult j = run({"normalize", "--algebra", "uq", "E*F", "--json"});
    CHECK(j.code == 0);
    CHECK(uelement_from_json(j.out) == u_normal_form("E*F"));
}

TEST_CASE("exit codes") {
    CHECK(run({"normalize", "--algebra", "uq", "E*"}).code == 2);
    CHECK(run({"normalize", "--algebra", "nope", "E"}).code == 2);
    CHECK(run({"normalize", "--algebra", "uq", "E", "--bogus"}).code == 2);
    CHECK(run({"wat"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"help"}).code == 0);
    CHECK(run({"cg", "1", "1", "9", "0", "0", "0"}).code == 2);  // h out of range
    CHECK(run({"verify", "presentation"}).code == 0);
}

TEST_CASE("cg command") {
    RunResult r = run({"cg", "1", "1", "1", "1", "0", "0"});
    CHECK(r.code == 0);
    CHECK(r.out == "-q\n");
    RunResult rec = run({"cg", "1", "1", "1", "1", "0", "0", "--mode", "recurrence"});
    CHECK(rec.out == r.out);
}

TEST_CASE("decompose json output") {
    RunResult r = run({"decompose", "1", "1", "1", "--json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"schema\":1") != std::string::npos);
    CHECK(r.out.find("\"total_dim\":8") != std::string::npos);
    CHECK(r.out.find("\"pass\":true") != std::string::npos);
    // deterministic
    CHECK(run({"decompose", "1", "1", "1", "--json"}).out == r.out);
}

TEST_CASE("module and leonard commands") {
    RunResult vd = run({"module", "vd", "--d", "1", "--a", "a", "--b", "b", "--c", "c",
                        "--matrices"});
    CHECK(vd.code == 0);
    CHECK(vd.out.find("\"relations_pass\":true") != std::string::npos);
    CHECK(vd.out.find("\"matrices\"") != std::string::npos);

    RunResult fin = run({"module", "finite", "--n", "2", "--eps", "-1"});
    CHECK(fin.code == 0);

    RunResult verma = run({"module", "verma", "--weight", "lambda", "--window", "5"});
    CHECK(verma.code == 0);
    CHECK(verma.out.find("\"irreducible\":true") != std::string::npos);

    RunResult leo = run({"leonard", "--d", "2", "--a", "q", "--b", "b", "--c", "c",
                         "--pair", "AB"});
    CHECK(leo.code == 0);  // direct and criterion agree (both negative)
    CHECK(leo.out.find("\"direct\":false") != std::string::npos);
    CHECK(leo.out.find("\"criterion\":false") != std::string::npos);
    CHECK(leo.out.find("\"agree\":true") != std::string::npos);
}

TEST_CASE("unicode input is accepted, ascii emitted") {
    RunResult r = run({"normalize", "--algebra", "aw", "α*A - A*α"});
    CHECK(r.code == 0);
    CHECK(r.out == "0\n");
}
