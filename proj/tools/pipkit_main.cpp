// pipkit: certify, count, enumerate, construct and verify from the shell.
//
// Exit codes: 0 success (certify: PIP), 1 certify found a non-PIP or a suite
// failed, 2 usage, parse or domain error.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pipkit/constructions.hpp"
#include "pipkit/counting.hpp"
#include "pipkit/ehrhart.hpp"
#include "pipkit/errors.hpp"
#include "pipkit/json_io.hpp"
#include "pipkit/suites.hpp"
#include "pipkit/svg.hpp"
#include "pipkit/vieta.hpp"

namespace fs = std::filesystem;
using namespace pipkit;

namespace {

constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << text;
}

std::vector<BigInt> parse_ints(const std::string& text) {
    std::vector<BigInt> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const Rational q = Rational::parse(item);
        if (!q.is_integer()) throw ParseError("expected integers, got '" + text + "'");
        out.push_back(q.num());
    }
    if (out.empty()) throw ParseError("expected a comma-separated integer list");
    return out;
}

std::vector<BigInt> expect_ints(const std::string& text, std::size_t n, const std::string& what) {
    auto v = parse_ints(text);
    if (v.size() != n) throw OutOfRange(what + " expects " + std::to_string(n) + " parameter(s), got '" + text + "'");
    return v;
}

Json report(const std::string& command, Json inputs, Json result) {
    return {{"command", command}, {"inputs", std::move(inputs)}, {"result", std::move(result)}};
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

// Aligned text table; for humans only.
void print_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> w(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) w[c] = header[c].size();
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) w[c] = std::max(w[c], row[c].size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            std::cout << (c ? "  " : "") << std::setw(static_cast<int>(w[c])) << cells[c];
        }
        std::cout << '\n';
    };
    line(header);
    for (const auto& row : rows) line(row);
}

std::vector<std::string> solution_row(const VietaSolution& s) {
    return {s.b().get_str(), s.x().get_str(), s.y().get_str(), s.z().get_str()};
}

struct VietaArgs {
    long b = 0;
    bool reduced = false;
    bool forest = false;
    std::string max_z;
    std::string family;
    std::size_t depth = 0;
    std::string format = "json";
};

int cmd_vieta(const VietaArgs& a) {
    const BigInt b(a.b);
    if (b < 1 || b > 9) throw OutOfRange("--b must satisfy 1 <= b <= 9");
    const int modes = int(a.reduced) + int(a.forest) + int(!a.family.empty());
    if (modes != 1) throw OutOfRange("choose exactly one of --reduced, --forest, --family");
    const bool table = a.format == "table";
    Json inputs = {{"b", a.b}};

    if (a.reduced) {
        const auto sols = enumerate_reduced(b);
        if (table) {
            std::vector<std::vector<std::string>> rows;
            for (const auto& s : sols) rows.push_back(solution_row(s));
            print_table({"b", "x", "y", "z"}, rows);
        } else {
            inputs["mode"] = "reduced";
            emit(report("vieta", inputs, to_json(sols)));
        }
        return 0;
    }
    if (a.forest) {
        if (a.max_z.empty()) throw OutOfRange("--forest needs --max-z");
        const BigInt max_z = expect_ints(a.max_z, 1, "--max-z")[0];
        const auto forest = jump_forest(b, max_z);
        if (table) {
            std::vector<std::vector<std::string>> rows;
            for (const auto& [node, nbrs] : forest.adjacency) {
                std::string list;
                for (const auto& n : nbrs) list += (list.empty() ? "" : " ") + n.key();
                rows.push_back({node.key(), forest.roots.count(node) ? "root" : "", list});
            }
            print_table({"x,y,z", "", "neighbours"}, rows);
        } else {
            inputs["mode"] = "forest";
            inputs["max_z"] = to_json(max_z);
            emit(report("vieta", inputs, to_json(forest)));
        }
        return 0;
    }
    const auto seed_entries = expect_ints(a.family, 3, "--family");
    const auto seed = VietaSolution::from_triple(seed_entries[0], seed_entries[1], seed_entries[2]);
    if (seed.b() != b) {
        throw OutOfRange("seed (" + seed.key() + ") has b=" + seed.b().get_str() + ", not " + b.get_str());
    }
    const auto fam = family(seed, a.depth);
    if (table) {
        std::vector<std::vector<std::string>> rows;
        for (const auto& st : fam) {
            rows.push_back({std::to_string(st.j), st.solution.x().get_str(), st.solution.y().get_str(),
                            st.solution.z().get_str()});
        }
        print_table({"j", "x", "y", "z"}, rows);
    } else {
        inputs["mode"] = "family";
        inputs["seed"] = seed.key();
        inputs["depth"] = a.depth;
        emit(report("vieta", inputs, to_json(fam)));
    }
    return 0;
}

struct ConstructArgs {
    std::string family;
    std::string params;
    std::string svg;
    std::string out_dir;
};

RationalPolygon build(const std::string& family, const std::string& params, const BigInt* index) {
    if (family == "reflexive") {
        const auto cat = reflexive_catalog();
        const BigInt& k = *index;
        if (k < 0 || k > 15) throw OutOfRange("reflexive index must satisfy 0 <= k <= 15");
        return cat[k.get_ui()];
    }
    if (family == "example-b1") return example_pip_b1(expect_ints(params, 1, family)[0]);
    if (family == "example-b2") return example_pip_b2(expect_ints(params, 1, family)[0]);
    if (family == "t-xyz") {
        const auto v = expect_ints(params, 3, family);
        if (v[0] < 1 || v[1] < 1 || v[2] < 1) throw OutOfRange("t-xyz entries must be positive");
        return t_xyz(VietaSolution::from_triple(v[0], v[1], v[2]));
    }
    if (family == "fibonacci") {
        const BigInt j = expect_ints(params, 1, family)[0];
        if (j < 1 || !j.fits_ulong_p()) throw OutOfRange("fibonacci needs j >= 1");
        return fibonacci_triangle(j.get_ui());
    }
    if (family == "scott-grid") {
        const auto v = expect_ints(params, 2, family);
        return scott_grid_polygon(v[0], v[1]);
    }
    if (family == "p3" || family == "p4" || family == "p10") {
        const auto v = expect_ints(params, 2, family);
        return construct_pip(std::stoi(family.substr(1)), v[0], v[1]);
    }
    throw OutOfRange("unknown family '" + family + "'");
}

int cmd_construct(const ConstructArgs& a) {
    std::vector<BigInt> indices;
    if (a.family == "reflexive") {
        const auto dots = a.params.find("..");
        if (dots == std::string::npos) {
            indices.push_back(expect_ints(a.params, 1, a.family)[0]);
        } else {
            const BigInt lo = expect_ints(a.params.substr(0, dots), 1, a.family)[0];
            const BigInt hi = expect_ints(a.params.substr(dots + 2), 1, a.family)[0];
            if (lo > hi) throw OutOfRange("empty reflexive range " + a.params);
            for (BigInt k = lo; k <= hi; ++k) indices.push_back(k);
        }
    }

    if (indices.size() <= 1) {
        const auto p = build(a.family, a.params, indices.empty() ? nullptr : &indices[0]);
        const std::string text = to_json(p).dump(2) + "\n";
        if (!a.svg.empty()) write_file(a.svg, render_svg(p));
        if (!a.out_dir.empty()) {
            fs::create_directories(a.out_dir);
            write_file(fs::path(a.out_dir) / (a.family + ".json"), text);
        }
        std::cout << text;
        return 0;
    }

    if (!a.svg.empty()) throw OutOfRange("--svg takes a single polygon; use --out-dir for ranges");
    const fs::path dir = a.out_dir.empty() ? fs::path(".") : fs::path(a.out_dir);
    fs::create_directories(dir);
    Json written = Json::array();
    for (const auto& k : indices) {
        const auto p = build(a.family, a.params, &k);
        std::string stem = k.get_str();
        stem.insert(0, stem.size() < 2 ? 2 - stem.size() : 0, '0');
        const fs::path json_path = dir / ("reflexive_" + stem + ".json");
        write_file(json_path, to_json(p).dump(2) + "\n");
        write_file(dir / ("reflexive_" + stem + ".svg"), render_svg(p));
        written.push_back(json_path.string());
    }
    emit(report("construct", {{"family", a.family}, {"params", a.params}}, written));
    return 0;
}

int cmd_certify(const std::string& file) {
    const auto p = parse_polygon(read_file(file));
    const auto cert = is_pseudointegral(p);
    emit(report("certify", {{"file", file}, {"polygon", to_json(p)}}, to_json(cert, p)));
    return cert.is_pip ? 0 : 1;
}

int cmd_count(const std::string& file, const std::string& t_text) {
    const auto p = parse_polygon(read_file(file));
    const BigInt t = expect_ints(t_text, 1, "--t")[0];
    emit(report("count", {{"file", file}, {"t", to_json(t)}}, to_json(count_report(p, t))));
    return 0;
}

struct VerifyArgs {
    std::string suite;
    std::int64_t bound = 0;
    std::int64_t n = 0;
    std::uint64_t seed = 20261018;
    bool json = false;
};

int cmd_verify(const VerifyArgs& a, bool has_bound, bool has_n) {
    SuiteOptions opts;
    if (has_bound) opts.bound = a.bound;
    if (has_n) opts.n = a.n;
    opts.seed = a.seed;
    opts.log = &std::cerr;
    const auto rep = run_suite(a.suite, opts);
    if (a.json) {
        Json checks = Json::array();
        for (const auto& c : rep.checks) {
            checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        }
        emit(report("verify", {{"suite", rep.suite}}, {{"passed", rep.passed()}, {"checks", checks}}));
    } else {
        std::size_t ok = 0;
        for (const auto& c : rep.checks) {
            ok += c.passed;
            std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail)
                      << '\n';
        }
        std::cout << rep.suite << ": " << ok << "/" << rep.checks.size() << " checks passed, "
                  << (rep.passed() ? "pass" : "FAIL") << '\n';
    }
    return rep.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact lattice-point counting, pseudointegrality certificates and Vieta jumping"};
    app.require_subcommand(1);

    std::string certify_file;
    auto* certify = app.add_subcommand("certify", "Certify whether a polygon file is pseudointegral");
    certify->add_option("file", certify_file, "polygon JSON file")->required();

    std::string count_file, count_t;
    auto* count = app.add_subcommand("count", "Lattice points of the t-th dilate");
    count->add_option("file", count_file, "polygon JSON file")->required();
    count->add_option("--t", count_t, "dilation factor")->required();

    VietaArgs va;
    auto* vieta = app.add_subcommand("vieta", "Solutions of (x+y+z)^2 = bxyz");
    vieta->add_option("--b", va.b, "1 <= b <= 9")->required();
    vieta->add_flag("--reduced", va.reduced, "reduced solutions");
    vieta->add_flag("--forest", va.forest, "jump forest up to --max-z");
    vieta->add_option("--max-z", va.max_z, "largest entry in the forest");
    vieta->add_option("--family", va.family, "reduced seed x,y,z");
    vieta->add_option("--depth", va.depth, "family depth");
    vieta->add_option("--format", va.format, "json or table")->check(CLI::IsMember({"json", "table"}));

    ConstructArgs ca;
    auto* construct = app.add_subcommand("construct", "Generate a polygon from a named family");
    construct->add_option("--family", ca.family,
                          "reflexive, example-b1, example-b2, t-xyz, fibonacci, scott-grid, p3, p4, p10")
        ->required();
    construct->add_option("--params", ca.params, "family parameters, comma separated")->required();
    construct->add_option("--svg", ca.svg, "write an SVG figure here");
    construct->add_option("--out-dir", ca.out_dir, "write polygon JSON files here");

    VerifyArgs ver;
    auto* verify = app.add_subcommand("verify", "Run a named verification suite");
    verify->add_option("--suite", ver.suite, "suite name")->required();
    auto* bound_opt = verify->add_option("--bound", ver.bound, "search bound");
    auto* n_opt = verify->add_option("--n", ver.n, "size parameter");
    verify->add_option("--seed", ver.seed, "random seed for the property suite");
    verify->add_flag("--json", ver.json, "JSON report instead of lines");
    verify->footer("Suites: reduced-table, b-sweep, general-bound, xyz-triangles, fibonacci, denominators, "
                   "counterexamples, reflexive, properties, low-boundary");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    const auto started = std::chrono::steady_clock::now();
    int code = 0;
    try {
        if (*certify) code = cmd_certify(certify_file);
        else if (*count) code = cmd_count(count_file, count_t);
        else if (*vieta) code = cmd_vieta(va);
        else if (*construct) code = cmd_construct(ca);
        else if (*verify) code = cmd_verify(ver, bound_opt->count() > 0, n_opt->count() > 0);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
    std::cerr << "elapsed " << ms.count() << " ms\n";
    return code;
}
