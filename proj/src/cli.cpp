#include "vdcat/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "vdcat/errors.hpp"
#include "vdcat/gendet.hpp"
#include "vdcat/linkdiag.hpp"
#include "vdcat/zndiag.hpp"

namespace vdcat {

namespace {

using Json = nlohmann::ordered_json;

Json big(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
        return v.convert_to<std::int64_t>();
    }
    return v.str();
}

Json optional_big(const std::optional<BigInt>& v) { return v ? big(*v) : Json(nullptr); }

std::string read_file(const std::string& path) {
    if (path.empty()) throw PreconditionError("--file is required for this command");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw PreconditionError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* command_name(Command c) {
    switch (c) {
        case Command::torus: return "torus";
        case Command::diagram: return "diagram";
        case Command::matrix: return "matrix";
        case Command::zmap: return "zmap";
        case Command::check: return "check";
    }
    return "?";
}

Json report_object(const HomologyReport& r, const std::string& command, const std::optional<PosIntMatrix>& matrix) {
    Json j;
    j["command"] = command;
    j["n"] = r.n;
    if (matrix) {
        Json rows = Json::array();
        for (const auto& row : matrix->rows()) {
            Json jr = Json::array();
            for (const auto& v : row) jr.push_back(big(v));
            rows.push_back(jr);
        }
        j["matrix"] = rows;
    } else {
        j["x"] = r.x;
        j["s"] = r.s;
    }
    j["cochain_dims"] = r.cochain_dims;
    j["homology_dims"] = r.homology_dims ? Json(*r.homology_dims) : Json(nullptr);
    j["euler_characteristic"] = big(r.euler_characteristic);
    j["homology_euler_characteristic"] = optional_big(r.homology_euler_characteristic);
    j["determinant"] = optional_big(r.determinant);
    j["agree"] = r.agree ? Json(*r.agree) : Json(nullptr);
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

std::string join(const auto& values) {
    std::ostringstream ss;
    bool first = true;
    for (const auto& v : values) {
        if (!first) ss << ',';
        ss << v;
        first = false;
    }
    return ss.str();
}

std::string report_table(const HomologyReport& r, const std::optional<PosIntMatrix>& matrix) {
    std::ostringstream ss;
    ss << "n        " << r.n << '\n';
    if (matrix) {
        for (const auto& row : matrix->rows()) ss << "matrix   " << join(row) << '\n';
    } else {
        ss << "x        " << join(r.x) << '\n';
        ss << "s        " << join(r.s) << '\n';
    }
    ss << "\nlevel  cochain  homology\n";
    for (std::size_t k = 0; k < r.cochain_dims.size(); ++k) {
        ss << std::left << std::setw(7) << k << std::setw(9) << r.cochain_dims[k];
        ss << (r.homology_dims ? std::to_string((*r.homology_dims)[k]) : std::string("-")) << '\n';
    }
    ss << "\nchi (cochain)   " << r.euler_characteristic << '\n';
    if (r.homology_euler_characteristic) ss << "chi (homology)  " << *r.homology_euler_characteristic << '\n';
    if (r.determinant) ss << "determinant     " << *r.determinant << '\n';
    if (r.agree) ss << "agree           " << (*r.agree ? "yes" : "NO") << '\n';
    ss << "elapsed         " << std::fixed << std::setprecision(1) << r.elapsed_ms << " ms\n";
    return ss.str();
}

RunResult finish(const HomologyReport& r, const RunConfig& config, const std::optional<PosIntMatrix>& matrix = {}) {
    RunResult result;
    result.output = config.format == OutputFormat::structured
                        ? report_object(r, command_name(config.command), matrix).dump(2) + "\n"
                        : report_table(r, matrix);
    result.exit_code = exit_status(r);
    if (result.exit_code != kExitOk) {
        result.diagnostic = "Euler characteristic does not match the determinant";
    }
    return result;
}

EulerOptions euler_options(const RunConfig& config) {
    EulerOptions o;
    o.budget = config.budget;
    o.skip_homology = config.skip_homology;
    o.homology.threads = config.threads;
    return o;
}

const ColorVector& require_x(const RunConfig& config, int n) {
    if (!config.x) throw PreconditionError("--x is required");
    if (config.x->size() != n) {
        throw PreconditionError("--x has " + std::to_string(config.x->size()) + " entries, expected " +
                                std::to_string(n));
    }
    return *config.x;
}

RunResult run_matrix(const RunConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    const PosIntMatrix m = parse_matrix(read_file(config.input_path));
    HomologyReport r;
    if (config.skip_homology) {
        const auto poset = shared_bruhat(m.n());
        std::vector<BigInt> dims(static_cast<std::size_t>(poset->max_rank() + 1), 0);
        for (std::size_t e = 0; e < poset->size(); ++e) {
            BigInt block = 1;
            for (int i = 1; i <= m.n(); ++i) block *= m.at(i, poset->element(e).at(i));
            dims[static_cast<std::size_t>(poset->rank_of(e))] += block;
        }
        for (const auto& d : dims) {
            if (d > std::numeric_limits<std::uint64_t>::max()) throw SizeError("cochain dimension does not fit 64 bits");
            r.cochain_dims.push_back(d.convert_to<std::uint64_t>());
        }
        r.n = m.n();
        r.euler_characteristic = alternating_sum(dims);
    } else {
        HomologyOptions h;
        h.threads = config.threads;
        r = homology(build_matrix_complex(m, config.budget), h);
    }
    r.determinant = det_exact(m);
    r.agree = r.euler_characteristic == *r.determinant &&
              (!r.homology_euler_characteristic || *r.homology_euler_characteristic == *r.determinant);
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return finish(r, config, m);
}

RunResult run_zmap(const RunConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    const ZndiagMorphism m = parse_morphism(read_file(config.input_path));
    const LinkDiagram d =
        config.diagram_path.empty() ? torus_two_n(m.source.size()) : parse_diagram(read_file(config.diagram_path));
    const CochainComplex cx = build_complex(d, m.source, config.budget);
    const CochainComplex cy = build_complex(d, m.target, config.budget);
    const ChainMap f = chain_map(cx, cy, m);
    const bool commutes = chain_map_commutes(cx, cy, f);

    Json j;
    j["command"] = "zmap";
    j["n"] = d.crossing_count();
    j["source"] = m.source.values();
    j["target"] = m.target.values();
    j["arcs"] = Json::array();
    for (auto [a, b] : m.arcs) j["arcs"].push_back({a, b});
    j["dots"] = m.dots;
    j["chain_map"] = Json::array();
    for (std::size_t k = 0; k < f.levels.size(); ++k) {
        j["chain_map"].push_back(
            {{"level", k}, {"rows", f.levels[k].rows()}, {"cols", f.levels[k].cols()}, {"nnz", f.levels[k].nnz()}});
    }
    j["commutes"] = commutes;

    std::ostringstream table;
    table << "source   " << m.source.to_string() << "\ntarget   " << m.target.to_string() << "\narcs     ";
    for (auto [a, b] : m.arcs) table << '(' << a << ',' << b << ") ";
    table << "\ndots     " << join(m.dots) << "\ncommutes " << (commutes ? "yes" : "NO") << '\n';

    if (commutes) {
        const CohomologyBasis bx(cx), by(cy);
        const auto maps = induced_cohomology_map(f, bx, by);
        j["source_homology_dims"] = bx.dims();
        j["target_homology_dims"] = by.dims();
        j["induced_maps"] = Json::array();
        table << "\nlevel  H(source)  H(target)  induced map rows\n";
        for (std::size_t k = 0; k < maps.size(); ++k) {
            Json rows = Json::array();
            std::string text;
            for (std::size_t r = 0; r < maps[k].rows(); ++r) {
                std::string row;
                for (std::size_t c = 0; c < maps[k].cols(); ++c) row += maps[k].get(r, c) ? '1' : '0';
                rows.push_back(row);
                text += (r ? " " : "") + row;
            }
            j["induced_maps"].push_back(rows);
            table << std::left << std::setw(7) << k << std::setw(11) << bx.dims()[k] << std::setw(11) << by.dims()[k]
                  << text << '\n';
        }
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    j["elapsed_ms"] = ms;

    RunResult result;
    result.output = config.format == OutputFormat::structured ? j.dump(2) + "\n" : table.str();
    if (!commutes) {
        result.exit_code = kExitMismatch;
        result.diagnostic = "chain map does not commute with the differentials";
    }
    return result;
}

RunResult run_check(const RunConfig& config) {
    const auto checks = run_property_checks(config.threads);
    bool all = true;
    Json j;
    j["command"] = "check";
    j["checks"] = Json::array();
    std::ostringstream table;
    for (const auto& c : checks) {
        all = all && c.passed;
        j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        table << (c.passed ? "PASS  " : "FAIL  ") << c.name;
        if (!c.detail.empty()) table << "  (" << c.detail << ')';
        table << '\n';
    }
    j["passed"] = all;
    RunResult result;
    result.output = config.format == OutputFormat::structured ? j.dump(2) + "\n" : table.str();
    if (!all) {
        result.exit_code = kExitMismatch;
        result.diagnostic = "property checks failed";
    }
    return result;
}

RunResult dispatch(const RunConfig& config) {
    switch (config.command) {
        case Command::torus: {
            if (!config.n) throw PreconditionError("--n is required");
            const LinkDiagram d = torus_two_n(*config.n);
            return finish(verify_euler(d, require_x(config, *config.n), euler_options(config)), config);
        }
        case Command::diagram: {
            const LinkDiagram d = parse_diagram(read_file(config.input_path));
            return finish(verify_euler(d, require_x(config, d.crossing_count()), euler_options(config)), config);
        }
        case Command::matrix: return run_matrix(config);
        case Command::zmap: return run_zmap(config);
        case Command::check: return run_check(config);
    }
    throw PreconditionError("unknown command");
}

std::string one_line(std::string s) {
    for (char& c : s)
        if (c == '\n' || c == '\r') c = ' ';
    return s;
}

}  // namespace

int exit_status(const HomologyReport& report) { return report.agree && !*report.agree ? kExitMismatch : kExitOk; }

std::string report_json(const HomologyReport& report, const std::string& command) {
    return report_object(report, command, std::nullopt).dump(2);
}

RunResult run(const RunConfig& config) {
    try {
        return dispatch(config);
    } catch (const ConsistencyError& e) {
        return {kExitMismatch, "", one_line(std::string("internal consistency failure: ") + e.what())};
    } catch (const std::exception& e) {
        return {kExitInputError, "", one_line(e.what())};
    }
}

int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bruhat-order complexes of colored link smoothings over GF(2)"};
    app.require_subcommand(1);
    RunConfig config;
    std::string x_text;
    bool json = false;

    const auto common = [&](CLI::App* sub) {
        sub->add_flag("--json", json, "Structured (JSON) report");
        sub->add_option("--threads", config.threads, "Worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--budget", config.budget, "Maximum total basis size of a complex");
    };
    auto* torus = app.add_subcommand("torus", "Closure of the 2-strand braid with n crossings");
    torus->add_option("--n", config.n, "Crossings")->required();
    torus->add_option("--x", x_text, "Color vector, comma separated")->required();
    torus->add_flag("--skip-homology", config.skip_homology, "Dimensions and Euler characteristic only");
    common(torus);

    auto* diagram = app.add_subcommand("diagram", "Diagram read from a JSON file");
    diagram->add_option("--file", config.input_path, "Diagram file")->required();
    diagram->add_option("--x", x_text, "Color vector, comma separated")->required();
    diagram->add_flag("--skip-homology", config.skip_homology, "Dimensions and Euler characteristic only");
    common(diagram);

    auto* matrix = app.add_subcommand("matrix", "Complex of a positive integer matrix");
    matrix->add_option("--file", config.input_path, "Matrix file")->required();
    matrix->add_flag("--skip-homology", config.skip_homology, "Dimensions and Euler characteristic only");
    common(matrix);

    auto* zmap = app.add_subcommand("zmap", "Chain map and induced cohomology map of a morphism");
    zmap->add_option("--file", config.input_path, "Morphism file")->required();
    zmap->add_option("--diagram", config.diagram_path, "Diagram file (default: the torus diagram)");
    common(zmap);

    auto* check = app.add_subcommand("check", "Run the built-in property suite");
    common(check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << one_line(e.what()) << '\n';
        return kExitInputError;
    }

    if (torus->parsed()) config.command = Command::torus;
    else if (diagram->parsed()) config.command = Command::diagram;
    else if (matrix->parsed()) config.command = Command::matrix;
    else if (zmap->parsed()) config.command = Command::zmap;
    else config.command = Command::check;
    config.format = json ? OutputFormat::structured : OutputFormat::table;
    if (!x_text.empty()) {
        try {
            config.x = ColorVector::parse(x_text);
        } catch (const std::exception& e) {
            err << "error: " << one_line(e.what()) << '\n';
            return kExitInputError;
        }
    }

    const RunResult result = run(config);
    out << result.output;
    if (!result.diagnostic.empty()) err << "error: " << result.diagnostic << '\n';
    return result.exit_code;
}

}  // namespace vdcat
