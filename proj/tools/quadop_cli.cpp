// Command-line surface for the exact operad / polynomial linear algebra
// pipelines: basis enumeration, consequence matrices, normal forms, Groebner
// bases, varieties, and the full case classification report.

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "quadop/caselab.hpp"

using namespace quadop;

namespace {

enum class Format { text, json, csv };

Format parse_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    throw CLI::ValidationError("--format", "expected text, json or csv");
}

std::string matrix_csv(const PolyMatrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ",";
            out += m.at(i, j).is_zero() ? "0" : m.at(i, j).str();
        }
        out += "\n";
    }
    return out;
}

nlohmann::json matrix_json(const PolyMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

void emit_matrix(const PolyMatrix& m, Format f, const std::string& json_key) {
    switch (f) {
        case Format::text: std::cout << m.str(); break;
        case Format::csv: std::cout << matrix_csv(m); break;
        case Format::json: {
            nlohmann::json j;
            j[json_key] = matrix_json(m);
            j["rows"] = m.rows();
            j["cols"] = m.cols();
            std::cout << j.dump(2) << "\n";
            break;
        }
    }
}

// Reads one polynomial per line; '#' lines and blank lines are skipped.
std::vector<std::string> read_generator_lines(const std::string& path) {
    std::istream* in = &std::cin;
    std::ifstream file;
    if (!path.empty() && path != "-") {
        file.open(path);
        if (!file) throw std::runtime_error("cannot open input file: " + path);
        in = &file;
    }
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(*in, line)) {
        std::string trimmed;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c)) || !trimmed.empty())
                trimmed += c;
        while (!trimmed.empty() &&
               std::isspace(static_cast<unsigned char>(trimmed.back())))
            trimmed.pop_back();
        if (trimmed.empty() || trimmed[0] == '#') continue;
        lines.push_back(trimmed);
    }
    return lines;
}

Ideal parse_ideal(const std::vector<std::string>& lines, std::string vars) {
    if (vars.empty()) {
        std::set<char> seen;
        for (auto& l : lines)
            for (char c : l)
                if (c >= 'a' && c <= 'd') seen.insert(c);
        vars.assign(seen.begin(), seen.end());
    }
    RingPtr ring = make_ring(vars);
    std::vector<Poly> gens;
    for (auto& l : lines) gens.push_back(parse_poly(ring, l));
    return make_ideal(ring, std::move(gens));
}

void emit_variety(const Variety& v, Format f) {
    std::vector<std::string> pts;
    for (auto& p : v.points) pts.push_back(variety_point_str(p));
    std::sort(pts.begin(), pts.end());
    if (f == Format::json) {
        nlohmann::json j;
        j["points"] = pts;
        j["unresolved"] = v.unresolved;
        std::cout << j.dump(2) << "\n";
        return;
    }
    for (auto& p : pts) std::cout << p << "\n";
    for (auto& u : v.unresolved) std::cout << "unresolved: " << u << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact quadratic-operad consequence-rank toolkit"};
    app.require_subcommand(1);

    std::string format_str = "text";
    unsigned long seed = 20240101;
    std::size_t pair_guard = 100000;
    app.add_option("--format", format_str, "text, json or csv")
        ->capture_default_str();
    app.add_option("--seed", seed, "seed for sampling commands")
        ->capture_default_str();
    app.add_option("--pair-guard", pair_guard,
                   "Buchberger runaway bound on generated S-pairs")
        ->capture_default_str();

    unsigned n = 4, w = 3, rank = 1, case_index = 1;
    bool all = false;
    std::string input_path;

    auto* cmd_basis = app.add_subcommand("basis", "ordered tree-monomial basis");
    cmd_basis->add_option("--n", n, "operation arity")->capture_default_str();
    cmd_basis->add_option("--w", w, "number of internal nodes")
        ->capture_default_str();

    auto add_rank_case = [&](CLI::App* cmd, bool case_required) {
        cmd->add_option("--rank", rank, "quadratic relation rank")->required();
        auto* opt = cmd->add_option("--case", case_index, "case within the rank");
        if (case_required) opt->required();
    };
    auto* cmd_cons = app.add_subcommand("consequences",
                                        "arity-10 consequence matrix of a case");
    add_rank_case(cmd_cons, true);
    auto* cmd_psf = app.add_subcommand("psf", "partial Smith form of a case");
    add_rank_case(cmd_psf, true);
    auto* cmd_mgb = app.add_subcommand("module-gb",
                                       "module Groebner basis of a case");
    add_rank_case(cmd_mgb, true);
    auto* cmd_hnf = app.add_subcommand("hnf", "Hermite normal form of a case");
    add_rank_case(cmd_hnf, true);

    std::string vars;
    auto* cmd_igb = app.add_subcommand("ideal-gb",
                                       "reduced Groebner basis of an ideal");
    cmd_igb->add_option("--input", input_path, "file with one generator per line");
    cmd_igb->add_option("--vars", vars, "ring variables, e.g. abc");
    auto* cmd_var = app.add_subcommand("variety",
                                       "solve a zero-dimensional ideal over Q(w)");
    cmd_var->add_option("--input", input_path, "file with one generator per line");
    cmd_var->add_option("--vars", vars, "ring variables, e.g. abc");

    auto* cmd_cls = app.add_subcommand("classify", "case classification report");
    add_rank_case(cmd_cls, false);
    auto* cmd_rep = app.add_subcommand("report", "all ranks 0-4 plus summaries");
    cmd_rep->add_flag("--all", all, "run every case");

    // global options (--format, --seed, --pair-guard) may follow a subcommand
    for (auto* sub : {cmd_basis, cmd_cons, cmd_psf, cmd_mgb, cmd_hnf, cmd_igb,
                      cmd_var, cmd_cls, cmd_rep})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Format fmt = parse_format(format_str);

        if (*cmd_basis) {
            Basis b = enumerate_basis(n, w);
            if (fmt == Format::json) {
                nlohmann::json j;
                j["n"] = n;
                j["w"] = w;
                j["arity"] = b.arity();
                j["dim"] = catalan_dim(n, w).get_str();
                nlohmann::json monos = nlohmann::json::array();
                for (std::size_t i = 0; i < b.monomials.size(); ++i)
                    monos.push_back({{"index", i + 1},
                                     {"compositional", b.monomials[i].comp_str()},
                                     {"parens", b.monomials[i].parens_str()}});
                j["monomials"] = monos;
                std::cout << j.dump(2) << "\n";
            } else {
                for (std::size_t i = 0; i < b.monomials.size(); ++i)
                    std::cout << (i + 1) << ": " << b.monomials[i].comp_str()
                              << " = " << b.monomials[i].parens_str() << "\n";
                std::cout << "dim = " << catalan_dim(n, w).get_str() << "\n";
            }
            return 0;
        }

        if (*cmd_cons) {
            CaseSpec spec = get_case(rank, case_index);
            if (spec.quad_rank == 0) throw std::domain_error("rank 0 has no relations");
            emit_matrix(consequence_matrix(spec.relations()), fmt, "matrix");
            return 0;
        }

        if (*cmd_psf) {
            CaseSpec spec = get_case(rank, case_index);
            PSFResult res = partial_smith(consequence_matrix(spec.relations()));
            if (fmt == Format::json) {
                nlohmann::json j;
                j["r"] = res.r;
                std::vector<std::string> ops;
                for (auto& op : res.ops) ops.push_back(op.str());
                j["operations"] = ops;
                j["operation_count"] = res.ops.size();
                j["block"] = matrix_json(res.B);
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "r = " << res.r << "\n";
                for (auto& op : res.ops)
                    std::cout << op.iteration << ") " << op.str() << "\n";
                std::cout << "operations = " << res.ops.size() << "\n";
                std::cout << "block B (" << res.B.rows() << " x " << res.B.cols()
                          << "):\n"
                          << res.B.str();
            }
            return 0;
        }

        if (*cmd_mgb) {
            CaseSpec spec = get_case(rank, case_index);
            ModuleGB gb = module_gb(consequence_matrix(spec.relations()));
            emit_matrix(gb.matrix(), fmt, "basis");
            return 0;
        }

        if (*cmd_hnf) {
            CaseSpec spec = get_case(rank, case_index);
            emit_matrix(hnf_univariate(consequence_matrix(spec.relations())), fmt,
                        "hnf");
            return 0;
        }

        if (*cmd_igb) {
            Ideal I = parse_ideal(read_generator_lines(input_path), vars);
            GBasis g = buchberger(I, pair_guard);
            if (fmt == Format::json) {
                nlohmann::json j;
                std::vector<std::string> elems;
                for (auto& e : g.elems) elems.push_back(e.str());
                j["gb"] = elems;
                std::cout << j.dump(2) << "\n";
            } else {
                for (auto& e : g.elems) std::cout << e.str() << "\n";
            }
            return 0;
        }

        if (*cmd_var) {
            Ideal I = parse_ideal(read_generator_lines(input_path), vars);
            emit_variety(solve_zero_dim(I, pair_guard), fmt);
            return 0;
        }

        if (*cmd_cls) {
            std::vector<CaseReport> reports;
            if (cmd_cls->count("--case")) {
                reports.push_back(run_case(get_case(rank, case_index), pair_guard));
            } else {
                for (auto& spec : enumerate_cases(rank))
                    reports.push_back(run_case(spec, pair_guard));
            }
            if (fmt == Format::json) {
                nlohmann::json arr = nlohmann::json::array();
                for (auto& r : reports)
                    arr.push_back(nlohmann::json::parse(r.json()));
                std::cout << (reports.size() == 1 ? arr[0].dump(2) : arr.dump(2))
                          << "\n";
            } else {
                for (auto& r : reports) std::cout << r.text();
            }
            return 0;
        }

        if (*cmd_rep) {
            if (!all) throw CLI::ValidationError("report", "pass --all");
            FullReport rep = run_all(pair_guard);
            if (fmt == Format::json) {
                std::cout << full_report_json(rep) << "\n";
            } else {
                for (auto& c : rep.cases) std::cout << c.text() << "\n";
                for (auto& s : rep.summaries) std::cout << s.text() << "\n";
            }
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
