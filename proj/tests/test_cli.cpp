#include "skein/json_io.hpp"

#include <catch2/catch.hpp>

#include <array>
#include <cstdio>
#include <fstream>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// run the CLI, capturing stdout (stderr folded in so error text is visible)
RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(SKEIN_CLI_PATH) + " " + args + " 2>&1";
    std::array<char, 4096> buf{};
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string temp_path(const std::string& name) {
    return std::string("/tmp/skein-test-") + name;
}

}  // namespace

TEST_CASE("cheb subcommand", "[cli]") {
    const RunResult r = run_cli("cheb 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "basis: monomial\nt^2 - 1\n");
}

TEST_CASE("relation subcommand", "[cli]") {
    const RunResult r = run_cli("relation 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("c: A^3 + A^-3\n") != std::string::npos);
    CHECK(r.out.find("d: A^3 + 2A + 2A^-1 + A^-3\n") != std::string::npos);
    CHECK(r.out.find("chebyshev: (A^3 + A^-3)*S_2 - (A^3 + 2A + 2A^-1 + A^-3)*S_0") !=
          std::string::npos);
    CHECK(run_cli("relation 1").exit_code == 1);
}

TEST_CASE("rank subcommand", "[cli]") {
    const RunResult r = run_cli("rank");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("4\n", 0) == 0);  // first line is the rank
    CHECK(r.out.find("n=30") != std::string::npos);
    const RunResult j = run_cli("--json rank --bound 5");
    CHECK(j.exit_code == 0);
    CHECK(j.out.find("\"rank\": 4") != std::string::npos);
}

TEST_CASE("nf subcommand", "[cli]") {
    const RunResult r = run_cli("nf \"(A^3+A^-3)*S_2\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("a0: A^3 + 2A + 2A^-1 + A^-3") != std::string::npos);
    CHECK(r.out.find("zero: false") != std::string::npos);

    const RunResult js = run_cli("--json nf \"S_0\"");
    CHECK(js.exit_code == 0);
    CHECK(js.out.find("\"zero\": false") != std::string::npos);
    CHECK(js.out.find("\"a0\": \"1\"") != std::string::npos);

    const RunResult mono = run_cli("nf \"t^2\"");
    CHECK(mono.exit_code == 0);
    CHECK(mono.out.find("a0: 1") != std::string::npos);
    CHECK(mono.out.find("residue[2]: 1") != std::string::npos);

    const RunResult err = run_cli("nf \"t^\"");
    CHECK(err.exit_code == 1);
    CHECK(err.out.find("column 3") != std::string::npos);
}

TEST_CASE("catalog subcommand", "[cli]") {
    const RunResult r = run_cli("catalog");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("S^1 x S^2: d = 1") != std::string::npos);
    CHECK(r.out.find("k=12") != std::string::npos);
    CHECK(r.out.find("F x S^1 (genus 2): d = 35") != std::string::npos);
    const RunResult j = run_cli("--json catalog --k-max 3");
    CHECK(j.exit_code == 0);
    CHECK(j.out.find("\"identity_verified\": true") != std::string::npos);
}

TEST_CASE("typecheck subcommand", "[cli]") {
    const RunResult r = run_cli("typecheck \"A + A^-1\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("k: 2") != std::string::npos);
    const RunResult not_of_type = run_cli("typecheck 2");
    CHECK(not_of_type.exit_code == 0);
    CHECK(not_of_type.out.find("not of (A^k - A^-k)-type") != std::string::npos);
}

TEST_CASE("torsion and obstruction emit certificates", "[cli]") {
    const std::string cert = temp_path("torsion.json");
    const RunResult r = run_cli("torsion 2 --out " + cert);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("annihilator: A + A^-1") != std::string::npos);
    std::ifstream in(cert);
    REQUIRE(in.good());
    skein::Json j;
    in >> j;
    CHECK(j.at("n") == 2);

    // byte-identical across runs
    const std::string cert2 = temp_path("torsion2.json");
    run_cli("torsion 2 --out " + cert2);
    std::ifstream in1(cert), in2(cert2);
    const std::string bytes1((std::istreambuf_iterator<char>(in1)), {});
    const std::string bytes2((std::istreambuf_iterator<char>(in2)), {});
    CHECK(bytes1 == bytes2);

    const RunResult none = run_cli("torsion 3");
    CHECK(none.exit_code == 0);
    CHECK(none.out.find("no torsion witness") != std::string::npos);

    const std::string ob = temp_path("obstruction.json");
    const RunResult o = run_cli("obstruction 2 --out " + ob);
    CHECK(o.exit_code == 0);
    CHECK(o.out.find("verdict: non-principal") != std::string::npos);
    CHECK(o.out.find("re-verified: ok") != std::string::npos);
}

TEST_CASE("bracket subcommand", "[cli]") {
    const std::string path = temp_path("trefoil.json");
    {
        std::ofstream out(path);
        out << skein::to_json(skein::trefoil()).dump(2) << "\n";
    }
    const RunResult r = run_cli("bracket " + path + " --method both");
    CHECK(r.exit_code == 0);
    const skein::LaurentPoly value = skein::parse_laurent(r.out.substr(0, r.out.find('\n')));
    CHECK(value == skein::bracket_statesum(skein::trefoil()));

    const RunResult threaded = run_cli("bracket " + path + " --threads 4");
    CHECK(threaded.out == r.out);

    const RunResult missing = run_cli("bracket /nonexistent/diagram.json");
    CHECK(missing.exit_code == 1);
    CHECK(missing.out.find("/nonexistent/diagram.json") != std::string::npos);
}

TEST_CASE("arrow subcommands", "[cli]") {
    const std::string x_path = temp_path("x.json");
    const RunResult gen = run_cli("arrow generator --name x --out " + x_path);
    CHECK(gen.exit_code == 0);

    const RunResult ok = run_cli("arrow validate " + x_path);
    CHECK(ok.exit_code == 0);
    CHECK(ok.out == "ok\n");

    const RunResult parity = run_cli("arrow parity " + x_path);
    CHECK(parity.exit_code == 0);
    CHECK(parity.out == "strand 0: 1\n");

    // cancel an inserted opposite arrow pair end-to-end
    const std::string move_path = temp_path("insert.json");
    {
        skein::arrow::MoveSpec m;
        m.kind = skein::arrow::MoveKind::ArrowCancel;
        m.reverse = true;
        m.strand = 0;
        m.pos = 0;
        m.dir = -1;
        std::ofstream out(move_path);
        out << skein::to_json(m).dump(2) << "\n";
    }
    const std::string bigger = temp_path("x-bigger.json");
    const RunResult applied = run_cli("arrow apply " + x_path + " --move " + move_path +
                                      " --out " + bigger);
    CHECK(applied.exit_code == 0);
    const RunResult parity2 = run_cli("arrow parity " + bigger);
    CHECK(parity2.out == "strand 0: 1\n");

    // invalid diagram: the validator lists violations and exits nonzero
    const std::string broken = temp_path("broken.json");
    {
        skein::arrow::ArrowDiagram d = skein::arrow::generator("K");
        d.pairs.clear();
        std::ofstream out(broken);
        out << skein::to_json(d).dump(2) << "\n";
    }
    const RunResult bad = run_cli("arrow validate " + broken);
    CHECK(bad.exit_code == 1);
    CHECK(bad.out.find("lacks antipode") != std::string::npos);
}

TEST_CASE("usage errors exit with 2", "[cli]") {
    CHECK(run_cli("definitely-not-a-subcommand").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("cheb").exit_code == 2);       // missing argument
    CHECK(run_cli("--help").exit_code == 0);
}
