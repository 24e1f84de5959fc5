#include "cli.hpp"

#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "json.hpp"
#include "uqaw/decompose.hpp"
#include "uqaw/errors.hpp"
#include "uqaw/golden.hpp"
#include "uqaw/json_io.hpp"
#include "uqaw/modules.hpp"

namespace uqaw::cli {

namespace {

using nlohmann::ordered_json;

// Fixed parameter order so identical invocations print identical bytes.
void declare_parameters() {
    static const char* names[] = {"kappa", "lambda", "mu", "a", "b", "c", "nu"};
    for (const char* n : names) ParamSet::global().declare(n);
}

struct Args {
    std::vector<std::string> positional;
    std::map<std::string, std::string> flags;   // --name value
    std::map<std::string, bool> switches;       // --name
};

// minimal deterministic argument splitter; flags listed per subcommand
Args parse_args(const std::vector<std::string>& argv, size_t start,
                const std::vector<std::string>& value_flags,
                const std::vector<std::string>& bool_flags) {
    Args a;
    for (size_t i = start; i < argv.size(); ++i) {
        const std::string& s = argv[i];
        if (s.rfind("--", 0) == 0) {
            std::string name = s.substr(2);
            if (std::find(bool_flags.begin(), bool_flags.end(), name) !=
                bool_flags.end()) {
                a.switches[name] = true;
                continue;
            }
            if (std::find(value_flags.begin(), value_flags.end(), name) !=
                value_flags.end()) {
                if (i + 1 >= argv.size())
                    throw invalid_argument_error("flag --" + name + " needs a value");
                a.flags[name] = argv[++i];
                continue;
            }
            throw invalid_argument_error("unknown flag: " + s);
        }
        a.positional.push_back(s);
    }
    return a;
}

long parse_long(const std::string& s, const char* what) {
    try {
        size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (...) {
        throw invalid_argument_error(std::string("expected an integer for ") + what +
                                     ", got '" + s + "'");
    }
}

int report_exit(const CheckReport& report, bool json, std::ostream& out) {
    out << (json ? report.to_json() + "\n" : report.to_text());
    return report.all_pass() ? 0 : 1;
}

int cmd_normalize(const Args& a, std::ostream& out) {
    auto it = a.flags.find("algebra");
    if (it == a.flags.end())
        throw invalid_argument_error("normalize needs --algebra {uq|aw}");
    if (a.positional.size() != 1)
        throw invalid_argument_error("normalize takes exactly one expression");
    bool json = a.switches.count("json");
    if (it->second == "uq") {
        UElement x = u_normal_form(a.positional[0]);
        out << (json ? to_json(x) : x.pretty()) << "\n";
        return 0;
    }
    if (it->second == "aw") {
        AWElement x = aw_normal_form(a.positional[0]);
        out << (json ? to_json(x) : x.pretty()) << "\n";
        return 0;
    }
    throw invalid_argument_error("--algebra must be uq or aw");
}

CheckReport tables_report() {
    CheckReport report = component_tables_check();
    report.title = "reference tables";
    // the coproduct tables of the Casimir element
    auto add_table = [&report](const std::string& name, const TElement& computed) {
        auto expected = golden::table_components(name);
        auto comps = t_components(computed);
        long residue = 0;
        for (const auto& [deg, comp] : expected) {
            auto it = comps.find(deg);
            if (it == comps.end()) residue += static_cast<long>(comp.size());
            else residue += static_cast<long>((comp - it->second).size());
        }
        for (const auto& [deg, comp] : comps)
            if (!expected.count(deg)) residue += static_cast<long>(comp.size());
        CheckItem item;
        item.name = "component table for " + name;
        item.pass = residue == 0;
        item.residue_terms = residue;
        report.items.insert(report.items.begin(), std::move(item));
    };
    add_table("delta2_lambda", n_fold_comultiply(2, u_casimir()));
    add_table("delta_lambda", comultiply(u_casimir()));
    return report;
}

int cmd_verify(const Args& a, std::ostream& out) {
    if (a.positional.size() != 1)
        throw invalid_argument_error(
            "verify takes one of: hopf embedding casimir-image centralizer tables "
            "presentation");
    bool json = a.switches.count("json");
    const std::string& what = a.positional[0];
    if (what == "hopf") return report_exit(hopf_axiom_check(), json, out);
    if (what == "embedding") return report_exit(verify_embedding(), json, out);
    if (what == "casimir-image") return report_exit(casimir_image_check(), json, out);
    if (what == "centralizer") return report_exit(centralizer_check(), json, out);
    if (what == "tables") return report_exit(tables_report(), json, out);
    if (what == "presentation") return report_exit(aw_presentation_check(), json, out);
    throw invalid_argument_error("unknown verification: " + what);
}

int cmd_cg(const Args& a, std::ostream& out) {
    if (a.positional.size() != 6)
        throw invalid_argument_error("cg takes m n h i j k");
    long v[6];
    const char* names[] = {"m", "n", "h", "i", "j", "k"};
    for (int t = 0; t < 6; ++t) v[t] = parse_long(a.positional[t], names[t]);
    CGIndex idx{v[0], v[1], v[2], v[3], v[4], v[5]};
    std::string mode = "closed";
    if (auto it = a.flags.find("mode"); it != a.flags.end()) mode = it->second;
    Scalar value;
    if (mode == "closed") value = cg_finite(idx);
    else if (mode == "recurrence") value = cg_finite_recurrence(idx);
    else throw invalid_argument_error("--mode must be closed or recurrence");
    if (a.switches.count("json")) {
        ordered_json j;
        j["schema"] = 1;
        j["index"] = {idx.m, idx.n, idx.h, idx.i, idx.j, idx.k};
        j["mode"] = mode;
        j["value"] = value.str();
        out << j.dump() << "\n";
    } else {
        out << value.str() << "\n";
    }
    return 0;
}

int cmd_decompose(const Args& a, std::ostream& out) {
    if (a.positional.size() != 3)
        throw invalid_argument_error("decompose takes m n p");
    long m = parse_long(a.positional[0], "m");
    long n = parse_long(a.positional[1], "n");
    long p = parse_long(a.positional[2], "p");
    DecompositionReport r = decompose_finite(m, n, p);
    out << (a.switches.count("json") ? to_json(r) + "\n" : to_table(r));
    return r.pass() ? 0 : 1;
}

int cmd_decompose_verma(const Args& a, std::ostream& out) {
    auto need = [&](const char* flag) {
        auto it = a.flags.find(flag);
        if (it == a.flags.end())
            throw invalid_argument_error(std::string("decompose-verma needs --") + flag);
        return parse_long(it->second, flag);
    };
    long dmax = need("dmax");
    long kmax = need("kmax");
    long window = dmax + kmax + 3;
    if (auto it = a.flags.find("window"); it != a.flags.end())
        window = parse_long(it->second, "window");
    DecompositionReport r = decompose_verma(dmax, kmax, window);
    out << (a.switches.count("json") ? to_json(r) + "\n" : to_table(r));
    return r.pass() ? 0 : 1;
}

ordered_json matrix_json(const Matrix& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Scalar flag_scalar(const Args& a, const char* name) {
    auto it = a.flags.find(name);
    if (it == a.flags.end())
        throw invalid_argument_error(std::string("missing --") + name);
    return Scalar::parse(it->second);
}

int cmd_module(const Args& a, std::ostream& out) {
    if (a.positional.size() != 1)
        throw invalid_argument_error("module takes one of: vd finite verma");
    const std::string& kind = a.positional[0];
    bool matrices = a.switches.count("matrices");
    ordered_json j;
    j["schema"] = 1;
    if (kind == "vd") {
        long d = parse_long(a.flags.count("d") ? a.flags.at("d") : "", "d");
        AWModule m = aw_vd_module(d, flag_scalar(a, "a"), flag_scalar(a, "b"),
                                  flag_scalar(a, "c"));
        CheckReport rel = aw_module_relation_check(m);
        j["module"] = "vd";
        j["d"] = d;
        j["dim"] = m.dim();
        j["scalars"] = {{"alpha", m.alpha.str()},
                        {"beta", m.beta.str()},
                        {"gamma", m.gamma.str()}};
        if (matrices)
            j["matrices"] = {{"A", matrix_json(m.A.mat)},
                             {"B", matrix_json(m.B.mat)},
                             {"C", matrix_json(m.C.mat)}};
        j["relations_pass"] = rel.all_pass();
        out << j.dump() << "\n";
        return rel.all_pass() ? 0 : 1;
    }
    if (kind == "finite") {
        long n = parse_long(a.flags.count("n") ? a.flags.at("n") : "", "n");
        long eps = 1;
        if (auto it = a.flags.find("eps"); it != a.flags.end())
            eps = parse_long(it->second, "eps");
        UqModule m = finite_uq_module(n, static_cast<int>(eps));
        CheckReport rel = module_relation_check(m);
        j["module"] = "finite";
        j["n"] = n;
        j["eps"] = eps;
        j["dim"] = m.dim();
        if (matrices)
            j["matrices"] = {{"E", matrix_json(m.E.mat)},
                             {"F", matrix_json(m.F.mat)},
                             {"K", matrix_json(m.K.mat)}};
        j["relations_pass"] = rel.all_pass();
        out << j.dump() << "\n";
        return rel.all_pass() ? 0 : 1;
    }
    if (kind == "verma") {
        Scalar lambda = flag_scalar(a, "weight");
        long window =
            parse_long(a.flags.count("window") ? a.flags.at("window") : "", "window");
        UqModule m = truncated_verma(lambda, window);
        CheckReport rel = module_relation_check(m);
        j["module"] = "verma";
        j["weight"] = lambda.str();
        j["window"] = window;
        j["irreducible"] = verma_irreducible(lambda);
        if (matrices)
            j["matrices"] = {{"E", matrix_json(m.E.mat)},
                             {"F", matrix_json(m.F.mat)},
                             {"K", matrix_json(m.K.mat)}};
        j["relations_pass"] = rel.all_pass();
        out << j.dump() << "\n";
        return rel.all_pass() ? 0 : 1;
    }
    throw invalid_argument_error("unknown module kind: " + kind);
}

ordered_json pair_json(const LeonardPairResult& r) {
    ordered_json j;
    j["direct"] = r.direct;
    j["criterion"] = r.criterion;
    j["agree"] = r.agree;
    if (!r.detail.empty()) j["detail"] = r.detail;
    return j;
}

int cmd_leonard(const Args& a, std::ostream& out) {
    long d = parse_long(a.flags.count("d") ? a.flags.at("d") : "", "d");
    AWModule m = aw_vd_module(d, flag_scalar(a, "a"), flag_scalar(a, "b"),
                              flag_scalar(a, "c"));
    ordered_json j;
    j["schema"] = 1;
    j["d"] = d;
    bool pass = true;
    if (auto it = a.flags.find("pair"); it != a.flags.end()) {
        LeonardPair which;
        if (it->second == "AB") which = LeonardPair::AB;
        else if (it->second == "BC") which = LeonardPair::BC;
        else if (it->second == "CA") which = LeonardPair::CA;
        else throw invalid_argument_error("--pair must be AB, BC or CA");
        LeonardPairResult r = leonard_check_pair(m, which);
        j["irreducible"] = r.module_irreducible;
        j["pair"] = it->second;
        j["result"] = pair_json(r);
        pass = r.agree;
    } else {
        LeonardTripleResult r = leonard_check_triple(m);
        j["irreducible"] = r.module_irreducible;
        j["triple"] = {{"direct", r.direct},
                       {"criterion", r.criterion},
                       {"agree", r.agree}};
        j["pairs"] = {{"AB", pair_json(r.ab)},
                      {"BC", pair_json(r.bc)},
                      {"CA", pair_json(r.ca)}};
        pass = r.agree && r.ab.agree && r.bc.agree && r.ca.agree;
    }
    out << j.dump() << "\n";
    return pass ? 0 : 1;
}

const char* kUsage =
    "usage: uqaw <command> [args]\n"
    "\n"
    "commands:\n"
    "  normalize --algebra {uq|aw} <expr> [--json]\n"
    "      PBW normal form of an expression in E F K Kinv (uq) or\n"
    "      A B C alpha beta gamma (aw)\n"
    "  verify {hopf|embedding|casimir-image|centralizer|tables|presentation} [--json]\n"
    "      run a verification campaign; exit 0 iff everything is zero\n"
    "  cg m n h i j k [--mode closed|recurrence] [--json]\n"
    "      finite coupling coefficient\n"
    "  decompose m n p [--json|--table]\n"
    "      decompose V(m) (x) V(n) (x) V(p) into verified blocks\n"
    "  decompose-verma --dmax D --kmax K [--window N] [--json]\n"
    "      same for Verma modules with symbolic weights kappa lambda mu\n"
    "  module {vd|finite|verma} [--d --a --b --c | --n --eps | --weight --window]\n"
    "      [--matrices]\n"
    "  leonard --d D --a A --b B --c C [--pair AB|BC|CA]\n";

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    declare_parameters();
    if (args.empty() || args[0] == "--help" || args[0] == "help") {
        out << kUsage;
        return args.empty() ? 2 : 0;
    }
    const std::string& cmd = args[0];
    try {
        if (cmd == "normalize") {
            Args a = parse_args(args, 1, {"algebra"}, {"json"});
            return cmd_normalize(a, out);
        }
        if (cmd == "verify") {
            Args a = parse_args(args, 1, {}, {"json"});
            return cmd_verify(a, out);
        }
        if (cmd == "cg") {
            Args a = parse_args(args, 1, {"mode"}, {"json"});
            return cmd_cg(a, out);
        }
        if (cmd == "decompose") {
            Args a = parse_args(args, 1, {}, {"json", "table"});
            return cmd_decompose(a, out);
        }
        if (cmd == "decompose-verma") {
            Args a = parse_args(args, 1, {"dmax", "kmax", "window"}, {"json"});
            return cmd_decompose_verma(a, out);
        }
        if (cmd == "module") {
            Args a = parse_args(args, 1,
                                {"d", "a", "b", "c", "n", "eps", "weight", "window"},
                                {"matrices", "json"});
            return cmd_module(a, out);
        }
        if (cmd == "leonard") {
            Args a = parse_args(args, 1, {"d", "a", "b", "c", "pair"}, {"json"});
            return cmd_leonard(a, out);
        }
        err << "unknown command: " << cmd << "\n" << kUsage;
        return 2;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace uqaw::cli
