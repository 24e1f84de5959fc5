#include "uqaw/json_io.hpp"

#include <sstream>

#include "json.hpp"
#include "uqaw/errors.hpp"
#include "uqaw/report.hpp"

namespace uqaw {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

std::string to_json(const UElement& x) {
    ordered j;
    j["schema"] = 1;
    j["algebra"] = "uq";
    ordered terms = ordered::array();
    for (const auto& [m, c] : x.terms())
        terms.push_back(ordered::array({ordered::array({m.f, m.k, m.e}), c.str()}));
    j["terms"] = std::move(terms);
    return j.dump();
}

std::string to_json(const AWElement& x) {
    ordered j;
    j["schema"] = 1;
    j["algebra"] = "aw";
    ordered terms = ordered::array();
    for (const auto& [m, c] : x.terms())
        terms.push_back(
            ordered::array({ordered::array({m.a, m.b, m.c, m.r, m.s, m.t}), c.str()}));
    j["terms"] = std::move(terms);
    return j.dump();
}

std::string to_json(const TElement& x) {
    ordered j;
    j["schema"] = 1;
    j["arity"] = x.arity();
    ordered terms = ordered::array();
    for (const auto& [m, c] : x.terms()) {
        ordered mono = ordered::array();
        for (const auto& slot : m)
            mono.push_back(ordered::array({slot.f, slot.k, slot.e}));
        terms.push_back(ordered::array({std::move(mono), c.str()}));
    }
    j["terms"] = std::move(terms);
    return j.dump();
}

UElement uelement_from_json(const std::string& text) {
    json j = json::parse(text);
    UElement out;
    for (const auto& t : j.at("terms")) {
        auto m = t.at(0);
        out.add_term(UMonomial{m.at(0).get<int32_t>(), m.at(1).get<int32_t>(),
                               m.at(2).get<int32_t>()},
                     Scalar::parse(t.at(1).get<std::string>()));
    }
    return out;
}

AWElement awelement_from_json(const std::string& text) {
    json j = json::parse(text);
    AWElement out;
    for (const auto& t : j.at("terms")) {
        auto m = t.at(0);
        out.add_term(AWMonomial{m.at(0).get<int32_t>(), m.at(1).get<int32_t>(),
                                m.at(2).get<int32_t>(), m.at(3).get<int32_t>(),
                                m.at(4).get<int32_t>(), m.at(5).get<int32_t>()},
                     Scalar::parse(t.at(1).get<std::string>()));
    }
    return out;
}

TElement telement_from_json(const std::string& text) {
    json j = json::parse(text);
    TElement out(j.at("arity").get<int>());
    for (const auto& t : j.at("terms")) {
        TMonomial mono;
        for (const auto& slot : t.at(0))
            mono.push_back(UMonomial{slot.at(0).get<int32_t>(),
                                     slot.at(1).get<int32_t>(),
                                     slot.at(2).get<int32_t>()});
        out.add_term(mono, Scalar::parse(t.at(1).get<std::string>()));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Reports

std::string CheckReport::to_text() const {
    std::ostringstream out;
    out << title << "\n";
    for (const auto& i : items) {
        out << "  " << (i.pass ? "PASS" : "FAIL") << "  " << i.name;
        if (!i.pass) out << "  (residue terms: " << i.residue_terms << ")";
        char buf[32];
        std::snprintf(buf, sizeof(buf), "  [%.1f ms]", i.wall_ms);
        out << buf;
        if (!i.detail.empty()) out << "  " << i.detail;
        out << "\n";
    }
    out << (all_pass() ? "all checks passed" : "CHECKS FAILED") << "\n";
    return out.str();
}

std::string CheckReport::to_json() const {
    ordered j;
    j["schema"] = 1;
    j["title"] = title;
    j["pass"] = all_pass();
    ordered checks = ordered::array();
    for (const auto& i : items) {
        ordered c;
        c["name"] = i.name;
        c["pass"] = i.pass;
        c["residue_terms"] = i.residue_terms;
        c["wall_ms"] = i.wall_ms;
        if (!i.detail.empty()) c["detail"] = i.detail;
        checks.push_back(std::move(c));
    }
    j["checks"] = std::move(checks);
    return j.dump();
}

namespace {

ordered block_to_json(const DecompositionBlock& b, bool verma) {
    ordered j;
    j[verma ? "d" : "l"] = b.l;
    j["k"] = b.k;
    if (!verma) j["d"] = b.d;
    j["dim"] = b.d + 1;
    j["a"] = b.a.str();
    j["b"] = b.b.str();
    j["c"] = b.c.str();
    ordered ae = ordered::array(), be = ordered::array();
    for (const auto& s : b.a_eigenvalues) ae.push_back(s.str());
    for (const auto& s : b.b_eigenvalues) be.push_back(s.str());
    j["a_eigenvalues"] = std::move(ae);
    j["b_eigenvalues"] = std::move(be);
    j["alpha"] = b.alpha_scalar.str();
    j["beta"] = b.beta_scalar.str();
    j["gamma"] = b.gamma_scalar.str();
    ordered checks;
    checks["a_eigenvectors"] = b.u_eigencheck;
    checks["b_eigenvectors"] = b.w_eigencheck;
    checks["central_scalars"] = b.central_scalars;
    checks["kernel_crosscheck"] = b.kernel_crosscheck;
    checks["intertwiner_invertible"] = b.intertwiner_invertible;
    checks["conjugation_matches"] = b.conjugation_matches;
    checks["phi1_identity"] = b.phi1_identity;
    checks["leonard_direct"] = b.leonard_direct;
    checks["leonard_criterion"] = b.leonard_criterion;
    checks["leonard_agree"] = b.leonard_agree;
    j["checks"] = std::move(checks);
    j["pass"] = b.pass();
    return j;
}

}  // namespace

std::string to_json(const DecompositionReport& r) {
    ordered j;
    j["schema"] = 1;
    if (r.verma) {
        j["kind"] = "verma";
        j["dmax"] = r.dmax;
        j["kmax"] = r.kmax;
        j["window"] = r.window;
    } else {
        j["kind"] = "finite";
        j["m"] = r.m;
        j["n"] = r.n;
        j["p"] = r.p;
        j["expected_dim"] = r.expected_dim;
        j["dims_ok"] = r.dims_ok;
    }
    j["total_dim"] = r.total_dim;
    ordered blocks = ordered::array();
    for (const auto& b : r.blocks) blocks.push_back(block_to_json(b, r.verma));
    j["blocks"] = std::move(blocks);
    j["pass"] = r.pass();
    return j.dump();
}

std::string to_table(const DecompositionReport& r) {
    std::ostringstream out;
    if (r.verma) {
        out << "verma decomposition, dmax = " << r.dmax << ", kmax = " << r.kmax
            << ", window = " << r.window << "\n";
    } else {
        out << "decomposition of V(" << r.m << ") (x) V(" << r.n << ") (x) V(" << r.p
            << ")\n";
    }
    out << (r.verma ? "(d,k)" : "(l,k)") << " | d | a b c | checks\n";
    for (const auto& b : r.blocks) {
        out << "(" << b.l << "," << b.k << ") | " << b.d << " | " << b.a.pretty()
            << "  " << b.b.pretty() << "  " << b.c.pretty() << " | "
            << (b.pass() ? "ok" : "FAIL") << "\n";
    }
    if (!r.verma)
        out << "total dimension " << r.total_dim << " (expected " << r.expected_dim
            << ")\n";
    out << (r.pass() ? "all blocks verified" : "BLOCKS FAILED") << "\n";
    return out.str();
}

}  // namespace uqaw
