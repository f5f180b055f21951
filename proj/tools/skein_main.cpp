// Command-line interface: every library operation behind stable text/JSON
// output. Exit codes: 0 success, 1 domain error, 2 usage error.

#include "skein/acceptance.hpp"
#include "skein/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace skein;

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
    return j;
}

void write_output(const Json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write file: " + out_path);
    out << j.dump(2) << "\n";
}

struct Options {
    bool json = false;
    unsigned threads = 1;

    // per-subcommand state
    std::string diagram_path, method = "statesum";
    unsigned cheb_n = 0;
    unsigned relation_n = 0;
    std::string poly_expr;
    unsigned torsion_n = 0, obstruction_n = 0;
    std::string out_path;
    unsigned rank_bound = 30;
    unsigned typecheck_k_bound = 64, typecheck_power_bound = 4;
    unsigned catalog_k_max = 12;
    std::string arrow_action, arrow_path, arrow_move_path, arrow_name;
};

int cmd_bracket(const Options& opt) {
    const PlanarDiagram d = planar_from_json(read_json_file(opt.diagram_path));
    const auto violations = validate(d);
    if (!violations.empty()) {
        for (const auto& v : violations) std::cerr << opt.diagram_path << ": " << v << "\n";
        return 1;
    }
    LaurentPoly value;
    if (opt.method == "statesum") value = bracket_statesum(d, opt.threads);
    else if (opt.method == "recursive") value = bracket_recursive(d);
    else if (opt.method == "both") {
        value = bracket_statesum(d, opt.threads);
        if (value != bracket_recursive(d)) {
            std::cerr << "internal error: state sum and recursion disagree\n";
            return 1;
        }
    } else {
        std::cerr << "unknown method '" << opt.method << "'\n";
        return 2;
    }
    if (opt.json) std::cout << Json{{"bracket", value.str()}}.dump(2) << "\n";
    else std::cout << value.str() << "\n";
    return 0;
}

int cmd_cheb(const Options& opt) {
    const TPoly s = chebyshev_S(opt.cheb_n);
    if (opt.json) {
        std::cout << Json{{"n", opt.cheb_n}, {"basis", "monomial"}, {"polynomial", s.str()}}.dump(2)
                  << "\n";
    } else {
        std::cout << "basis: monomial\n" << s.str() << "\n";
    }
    return 0;
}

int cmd_relation(const Options& opt) {
    const Relation r = relation(opt.relation_n);
    const TPoly mono = to_monomial(r.expression);
    if (opt.json) {
        std::cout << Json{{"n", r.n},
                          {"c", r.c.str()},
                          {"d", r.d.str()},
                          {"chebyshev", r.expression.str()},
                          {"monomial", mono.str()}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "n: " << r.n << "\n"
                  << "c: " << r.c.str() << "\n"
                  << "d: " << r.d.str() << "\n"
                  << "chebyshev: " << r.expression.str() << "\n"
                  << "monomial: " << mono.str() << "\n";
    }
    return 0;
}

int cmd_nf(const Options& opt) {
    const NormalForm nf = normal_form(parse_tpoly(opt.poly_expr));
    if (opt.json) {
        std::cout << to_json(nf).dump(2) << "\n";
        return 0;
    }
    std::cout << "basis: chebyshev\n"
              << "a0: " << nf.a0.str() << "\n"
              << "a1: " << nf.a1.str() << "\n";
    for (const auto& [n, r] : nf.residues)
        std::cout << "residue[" << n << "]: " << r.str() << "\n";
    std::cout << "zero: " << (nf.is_zero() ? "true" : "false") << "\n";
    return 0;
}

int cmd_torsion(const Options& opt) {
    const auto witness = torsion_witness(opt.torsion_n);
    if (!witness) {
        std::cout << "no torsion witness: gcd(c_" << opt.torsion_n << ", d_" << opt.torsion_n
                  << ") is a unit\n";
        return 0;
    }
    const std::string path =
        opt.out_path.empty() ? "torsion-n" + std::to_string(opt.torsion_n) + ".json" : opt.out_path;
    write_output(to_json(*witness), path);
    const auto type = torsion_type_check(witness->annihilator);
    std::cout << "n: " << witness->n << "\n"
              << "witness: " << witness->element.str() << "   [chebyshev basis]\n"
              << "annihilator: " << witness->annihilator.str() << "\n";
    if (type)
        std::cout << "annihilator type: (A^k - A^-k) with k = " << type->k << " (power "
                  << type->power << ")\n";
    std::cout << "check normal_form(witness) != 0: ok\n"
              << "check normal_form(annihilator * witness) == 0: ok\n"
              << "certificate: " << path << "\n";
    return 0;
}

int cmd_obstruction(const Options& opt) {
    const SplitObstruction ob = split_obstruction(opt.obstruction_n);
    const std::string path = opt.out_path.empty()
                                 ? "obstruction-n" + std::to_string(opt.obstruction_n) + ".json"
                                 : opt.out_path;
    write_output(to_json(ob), path);
    std::cout << "n: " << ob.n << "\n"
              << "ideal: (" << ob.ideal.g1.str() << ", " << ob.ideal.g2.str() << ")\n"
              << "verdict: " << principality_name(ob.verdict.status) << "\n"
              << "gcd: " << ob.verdict.gcd_evidence.gcd.str() << "\n";
    if (ob.verdict.properness)
        std::cout << "properness: mod " << ob.verdict.properness->prime << ", common factor "
                  << ob.verdict.properness->common.str() << "\n";
    std::cout << "re-verified: " << (verify_principality(ob.verdict, ob.ideal) ? "ok" : "FAILED")
              << "\n"
              << "certificate: " << path << "\n";
    return verify_principality(ob.verdict, ob.ideal) ? 0 : 1;
}

int cmd_rank(const Options& opt) {
    const RankReport report = rank_over_QA(opt.rank_bound);
    if (opt.json) {
        std::cout << to_json(report).dump(2) << "\n";
        return 0;
    }
    std::cout << report.rank << "\n";
    std::cout << "free generators: K, K'\n";
    for (const auto& e : report.entries)
        std::cout << "n=" << e.n << ": S_" << e.n << " -> (" << e.reduced.str() << ") * S_"
                  << e.n % 2 << (e.verified ? "" : "   [UNVERIFIED]") << "\n";
    return 0;
}

int cmd_catalog(const Options& opt) {
    const auto catalog = manifold_catalog(opt.catalog_k_max);
    if (opt.json) {
        std::cout << to_json(catalog).dump(2) << "\n";
        return 0;
    }
    for (const ManifoldProfile& p : catalog) {
        std::cout << p.name << ": d = " << p.free_rank << "; " << p.torsion_note << "\n";
        for (const TorsionSummand& s : p.summands) {
            std::cout << "  k=" << s.k << ": annihilator " << s.annihilator.str()
                      << (s.identity_verified ? "   [= -A^k(A^k - A^-k), verified]" : "");
            if (s.type) std::cout << "   [type k=" << s.type->k << "]";
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_typecheck(const Options& opt) {
    const LaurentPoly ann = parse_laurent(opt.poly_expr);
    const auto type = torsion_type_check(ann, opt.typecheck_k_bound, opt.typecheck_power_bound);
    if (opt.json) {
        Json j{{"annihilator", ann.str()}};
        if (type) { j["k"] = type->k; j["power"] = type->power; }
        else j["k"] = nullptr;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "annihilator: " << ann.str() << "\n";
    if (type)
        std::cout << "k: " << type->k << "   (divides (A^" << type->k << " - A^-" << type->k
                  << ")^" << type->power << ")\n";
    else
        std::cout << "not of (A^k - A^-k)-type within bounds (k <= " << opt.typecheck_k_bound
                  << ", power <= " << opt.typecheck_power_bound << ")\n";
    return 0;
}

int cmd_arrow(const Options& opt) {
    if (opt.arrow_action == "generator") {
        write_output(to_json(arrow::generator(opt.arrow_name)), opt.out_path);
        return 0;
    }
    const arrow::ArrowDiagram d = arrow_from_json(read_json_file(opt.arrow_path));
    if (opt.arrow_action == "validate") {
        const auto violations = arrow::validate(d);
        if (violations.empty()) {
            std::cout << "ok\n";
            return 0;
        }
        for (const auto& v : violations) std::cout << v << "\n";
        return 1;
    }
    if (opt.arrow_action == "parity") {
        const auto parity = arrow::arrow_count_parity(d);
        for (std::size_t i = 0; i < parity.size(); ++i)
            std::cout << "strand " << i << ": " << parity[i] << "\n";
        return 0;
    }
    if (opt.arrow_action == "apply") {
        const arrow::MoveSpec m = move_from_json(read_json_file(opt.arrow_move_path));
        const arrow::ArrowDiagram out = arrow::apply_move(d, m);
        write_output(to_json(out), opt.out_path);
        return 0;
    }
    std::cerr << "unknown arrow action '" << opt.arrow_action
              << "' (validate, apply, parity, generator)\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kauffman bracket skein computations over Z[A^(+/-1)]"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.json, "machine-readable JSON output");

    auto* bracket = app.add_subcommand("bracket", "evaluate the Kauffman bracket of a diagram");
    bracket->add_option("diagram", opt.diagram_path, "diagram JSON file")->required();
    bracket->add_option("--method", opt.method, "statesum | recursive | both (default statesum)");
    bracket->add_option("--threads", opt.threads, "partition the state sum");

    auto* cheb = app.add_subcommand("cheb", "print the Chebyshev polynomial S_n (second kind)");
    cheb->add_option("n", opt.cheb_n, "index")->required();

    auto* rel = app.add_subcommand("relation", "print the presentation relation for n");
    rel->add_option("n", opt.relation_n, "index (n >= 2)")->required();

    auto* nf = app.add_subcommand("nf", "normal form of a polynomial expression");
    nf->add_option("expr", opt.poly_expr, "expression in A, t, S_k")->required();

    auto* torsion = app.add_subcommand("torsion", "torsion witness certificate for n");
    torsion->add_option("n", opt.torsion_n, "index (n >= 2)")->required();
    torsion->add_option("--out", opt.out_path, "certificate file (default torsion-n<k>.json)");

    auto* obstruction = app.add_subcommand("obstruction", "non-splitness obstruction for n");
    obstruction->add_option("n", opt.obstruction_n, "index (n >= 2)")->required();
    obstruction->add_option("--out", opt.out_path, "certificate file (default obstruction-n<k>.json)");

    auto* rank = app.add_subcommand("rank", "rank over Q(A) with the per-n reduction report");
    rank->add_option("--bound", opt.rank_bound, "verify reductions for n up to this bound (default 30)");

    auto* catalog = app.add_subcommand("catalog", "known-manifold decomposition profiles");
    catalog->add_option("--k-max", opt.catalog_k_max, "torsion summands up to this k (default 12)");

    auto* typecheck = app.add_subcommand("typecheck", "(A^k - A^-k)-torsion type of an annihilator");
    typecheck->add_option("expr", opt.poly_expr, "Laurent polynomial in A")->required();
    typecheck->add_option("--k-bound", opt.typecheck_k_bound, "largest k tried (default 64)");
    typecheck->add_option("--power-bound", opt.typecheck_power_bound, "largest power tried (default 4)");

    auto* arrow_cmd = app.add_subcommand("arrow", "arrow diagram operations");
    arrow_cmd->add_option("action", opt.arrow_action, "validate | apply | parity | generator")
        ->required();
    arrow_cmd->add_option("file", opt.arrow_path, "arrow diagram JSON file");
    arrow_cmd->add_option("--move", opt.arrow_move_path, "move spec JSON file (apply)");
    arrow_cmd->add_option("--name", opt.arrow_name, "generator name: empty, x, t, K, K' (generator)");
    arrow_cmd->add_option("--out", opt.out_path, "output file (default stdout)");

    app.add_subcommand("selftest", "run the acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(bracket)) return cmd_bracket(opt);
        if (app.got_subcommand(cheb)) return cmd_cheb(opt);
        if (app.got_subcommand(rel)) return cmd_relation(opt);
        if (app.got_subcommand(nf)) return cmd_nf(opt);
        if (app.got_subcommand(torsion)) return cmd_torsion(opt);
        if (app.got_subcommand(obstruction)) return cmd_obstruction(opt);
        if (app.got_subcommand(rank)) return cmd_rank(opt);
        if (app.got_subcommand(catalog)) return cmd_catalog(opt);
        if (app.got_subcommand(typecheck)) return cmd_typecheck(opt);
        if (app.got_subcommand(arrow_cmd)) return cmd_arrow(opt);
        if (app.got_subcommand("selftest")) return skein::acceptance::run_and_print(std::cout);
    } catch (const skein::parse_error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
