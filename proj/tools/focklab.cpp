// focklab command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "focklab/expr.hpp"
#include "focklab/jsonio.hpp"
#include "focklab/verify.hpp"
#include "focklab/vertex.hpp"

using namespace focklab;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

Partition parse_parts(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        std::size_t used = 0;
        const int v = std::stoi(item, &used);
        if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument("bad partition '" + text + "'");
        parts.push_back(v);
    }
    return Partition(parts);
}

std::vector<HalfInt> parse_halfints(const std::string& text) {
    std::vector<HalfInt> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(HalfInt::parse(item));
    return out;
}

// Beads from the highest black down to the window: '#' black, '.' white.
std::string bead_string(const MayaSpec& m) {
    int top = m.window_lo.twice();
    for (const auto& b : m.blacks) top = std::max(top, b.twice());
    std::string s;
    for (int p = top; p >= m.window_lo.twice(); p -= 2) {
        bool black = false;
        for (const auto& b : m.blacks) black = black || b.twice() == p;
        s += black ? '#' : '.';
    }
    return s + " (black below)";
}

int cmd_convert(const std::string& state, const std::string& maya_json, const std::string& blacks,
                const std::string& window_lo, bool as_json) {
    ChargedPartition cp;
    if (!state.empty()) cp = ChargedPartition::parse(state);
    else if (!maya_json.empty()) cp = maya_to_partition(maya_from_json(json::parse(maya_json)));
    else if (!blacks.empty()) cp = maya_to_partition(MayaSpec{HalfInt::parse(window_lo), parse_halfints(blacks)});
    else throw std::invalid_argument("convert needs --state, --maya or --blacks");

    const MayaSpec maya = partition_to_maya(cp);
    const auto wedge = black_positions(cp, cp.lambda.length() + 3);
    if (as_json) {
        std::vector<int> w;
        for (const auto& m : wedge) w.push_back(m.twice());
        std::cout << json{{"state", to_json(cp)}, {"maya", to_json(maya)}, {"wedge", w}}.dump() << "\n";
        return kOk;
    }
    std::cout << "state: " << cp.str() << "\nmaya:  window_lo " << maya.window_lo.str() << ", blacks";
    for (const auto& b : maya.blacks) std::cout << " " << b.str();
    std::cout << "\nbeads: " << bead_string(maya) << "\nwedge:";
    for (std::size_t i = 0; i < wedge.size(); ++i) std::cout << (i ? " ^ " : " ") << "e" << wedge[i].str();
    std::cout << " ^ ...\n";
    return kOk;
}

Ring parse_ring(const std::string& ring) {
    if (ring == "rational") return Ring::rational;
    if (ring == "q") return Ring::q;
    throw std::invalid_argument("ring must be 'rational' or 'q'");
}

void print_vec(const QVec& v, Ring ring, bool as_json) {
    if (ring == Ring::rational) {
        const RVec r = to_rational(v);
        std::cout << (as_json ? to_json(r).dump() : to_string(r)) << "\n";
    } else {
        std::cout << (as_json ? to_json(v).dump() : to_string(v)) << "\n";
    }
}

int cmd_act(const std::string& expr, const std::string& state, std::optional<int> level, const std::string& ring,
            bool as_json) {
    const Expr e = parse_expr(expr);
    EvalOptions opts{level, parse_ring(ring)};
    print_vec(eval_expr(e, ChargedPartition::parse(state), opts), opts.ring, as_json);
    return kOk;
}

int cmd_chi(const std::string& partition, bool as_json) {
    const MultiPoly& chi = char_poly(parse_parts(partition));
    std::cout << (as_json ? to_json(chi).dump() : chi.str("x")) << "\n";
    return kOk;
}

int cmd_schur(const std::string& partition, int vars, bool as_json) {
    const SymPoly s = schur(parse_parts(partition), vars);
    std::cout << (as_json ? to_json(s.poly).dump() : s.poly.str("y")) << "\n";
    return kOk;
}

int cmd_bf_check(const std::string& m_text, const std::string& state, bool star, bool as_json) {
    const HalfInt m = HalfInt::parse(m_text);
    const ChargedPartition cp = ChargedPartition::parse(state);
    const RVec bosonic = star ? fermion_star_from_bosons(m, RVec::basis(cp)) : fermion_from_bosons(m, RVec::basis(cp));
    const RVec fermionic = star ? apply_psi_star(m, cp) : apply_psi(m, cp);
    const bool agree = bosonic == fermionic;
    if (as_json) {
        std::cout << json{{"m", m.str()}, {"state", to_json(cp)}, {"star", star}, {"from_bosons", to_json(bosonic)},
                          {"clifford", to_json(fermionic)}, {"agree", agree}}
                         .dump()
                  << "\n";
    } else {
        const std::string op = star ? "psis(" : "psi(";
        std::cout << "from bosons: " << to_string(bosonic) << "\n"
                  << op << m.str() << "):" << std::string(star ? 4 : 5, ' ') << to_string(fermionic) << "\n"
                  << (agree ? "agree" : "DIFFER") << "\n";
    }
    return agree ? kOk : kFailed;
}

int cmd_mm_act(int level, const std::string& op, const std::string& state, bool as_json) {
    if (op.size() < 2 || (op[0] != 'E' && op[0] != 'F' && op[0] != 'K'))
        throw std::invalid_argument("op must look like E0, F1 or K2");
    const std::string atom = std::string(op[0] == 'K' ? "K" : op.substr(0, 1) + "q") + "(" + op.substr(1) + ")";
    EvalOptions opts{level, Ring::q};
    print_vec(eval_expr(parse_expr(atom), ChargedPartition::parse(state), opts), Ring::q, as_json);
    return kOk;
}

int cmd_verify(const std::string& suite, std::optional<int> max_size, bool as_json) {
    std::vector<std::string> suites = suite == "all" ? suite_names() : std::vector<std::string>{suite};
    VerifyOptions opts;
    opts.max_size = max_size;
    bool ok = true;
    json reports = json::array();
    for (const auto& name : suites) {
        const SuiteReport r = run_suite(name, opts);
        ok = ok && r.ok();
        if (as_json) reports.push_back(r.to_json());
        else std::cout << r.to_text();
    }
    if (as_json) std::cout << (suites.size() == 1 ? reports.front() : reports).dump(2) << "\n";
    return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in the fermionic Fock space"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "JSON output");

    std::string state, maya_json, blacks, window_lo = "-1/2", expr, ring = "rational", partition, m_text, op, suite;
    std::optional<int> level, max_size;
    int vars = 3;
    bool star = false;

    auto* convert = app.add_subcommand("convert", "Convert between charged partitions and Maya diagrams");
    convert->add_option("--state", state, "Charged partition, e.g. '(4,3,3,1,1);-1'");
    convert->add_option("--maya", maya_json, "Maya diagram as JSON with doubled positions");
    convert->add_option("--blacks", blacks, "Comma separated black positions, e.g. '5/2,1/2'");
    convert->add_option("--window-lo", window_lo, "Lowest listed position; everything below is black");
    convert->add_flag("--json", as_json, "JSON output");

    auto* act = app.add_subcommand("act", "Apply an operator expression to a basis state");
    act->add_option("--expr", expr, "Operator expression")->required();
    act->add_option("--state", state, "Charged partition")->required();
    act->add_option("--level", level, "Level l for E, F, Eq, Fq, K, d");
    act->add_option("--ring", ring, "rational or q");
    act->add_flag("--json", as_json, "JSON output");

    auto* chi = app.add_subcommand("chi", "Character polynomial chi_lambda");
    chi->add_option("--partition", partition, "Parts, e.g. 2,1")->required();
    chi->add_flag("--json", as_json, "JSON output");

    auto* sch = app.add_subcommand("schur", "Schur polynomial in n variables");
    sch->add_option("--partition", partition, "Parts, e.g. 2,1")->required();
    sch->add_option("--vars", vars, "Number of variables")->check(CLI::PositiveNumber);
    sch->add_flag("--json", as_json, "JSON output");

    auto* bf = app.add_subcommand("bf-check", "Compare psi_m from bosons with the Clifford action");
    bf->add_option("--m", m_text, "Position a/2")->required();
    bf->add_option("--state", state, "Charged partition")->required();
    bf->add_flag("--star", star, "Check psi*_m instead");
    bf->add_flag("--json", as_json, "JSON output");

    auto* mm = app.add_subcommand("mm-act", "Misra-Miwa operators on the q-Fock space");
    mm->add_option("--level", level, "Level l")->required();
    mm->add_option("--op", op, "E<i>, F<i> or K<i>")->required();
    mm->add_option("--state", state, "Charged partition")->required();
    mm->add_flag("--json", as_json, "JSON output");

    auto* ver = app.add_subcommand("verify", "Run a verification suite");
    ver->add_option("--suite", suite, "Suite name or 'all'")->required();
    ver->add_option("--max-size", max_size, "Bound on |lambda| (series degree for gamma)");
    ver->add_flag("--json", as_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*convert) return cmd_convert(state, maya_json, blacks, window_lo, as_json);
        if (*act) return cmd_act(expr, state, level, ring, as_json);
        if (*chi) return cmd_chi(partition, as_json);
        if (*sch) return cmd_schur(partition, vars, as_json);
        if (*bf) return cmd_bf_check(m_text, state, star, as_json);
        if (*mm) return cmd_mm_act(*level, op, state, as_json);
        if (*ver) return cmd_verify(suite, max_size, as_json);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const EvalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const json::exception& e) {
        std::cerr << "bad JSON: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
