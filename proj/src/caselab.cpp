#include "quadop/caselab.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace quadop {

namespace {

std::vector<std::vector<unsigned>> combinations(unsigned n, unsigned k) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur;
    auto rec = [&](auto&& self, unsigned start) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (unsigned v = start; v < n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace

std::vector<Relation> CaseSpec::relations() const {
    std::vector<Relation> rels;
    for (std::size_t i = 0; i < relation_matrix.rows(); ++i) {
        Relation r;
        r.ring = ring;
        for (std::size_t j = 0; j < 4; ++j)
            r.coeff.push_back(relation_matrix.at(i, j));
        rels.push_back(std::move(r));
    }
    return rels;
}

std::vector<CaseSpec> enumerate_cases(unsigned quad_rank) {
    if (quad_rank > 4)
        throw std::out_of_range("enumerate_cases: rank 0..4");
    std::vector<CaseSpec> out;
    static const char names[] = {'a', 'b', 'c', 'd'};
    unsigned idx = 0;
    for (const auto& leads : combinations(4, quad_rank)) {
        ++idx;
        // free positions: non-lead columns strictly right of the row's lead
        std::vector<std::pair<unsigned, unsigned>> free_pos;
        for (unsigned i = 0; i < quad_rank; ++i)
            for (unsigned j = leads[i] + 1; j < 4; ++j)
                if (std::find(leads.begin(), leads.end(), j) == leads.end())
                    free_pos.emplace_back(i, j);
        CaseSpec spec;
        spec.quad_rank = quad_rank;
        spec.case_index = idx;
        spec.ring = make_ring(std::string(names, names + free_pos.size()));
        spec.relation_matrix = PolyMatrix(spec.ring, quad_rank, 4);
        for (unsigned i = 0; i < quad_rank; ++i)
            spec.relation_matrix.at(i, leads[i]) = Poly(spec.ring, Rational(1));
        for (std::size_t p = 0; p < free_pos.size(); ++p)
            spec.relation_matrix.at(free_pos[p].first, free_pos[p].second) =
                Poly::variable(spec.ring, names[p]);
        out.push_back(std::move(spec));
    }
    return out;
}

CaseSpec get_case(unsigned quad_rank, unsigned case_index) {
    auto cases = enumerate_cases(quad_rank);
    if (case_index < 1 || case_index > cases.size())
        throw std::out_of_range("case index out of range for this rank");
    return cases[case_index - 1];
}

std::string method_name(Method m) {
    switch (m) {
        case Method::rcf: return "rcf";
        case Method::hnf: return "hnf";
        case Method::psf: return "psf";
        case Method::module_gb: return "module_gb";
    }
    return {};
}

namespace {

// Rank stratification of the non-unit block via its determinantal ideals.
void analyze_block(CaseReport& rep, std::size_t pair_guard) {
    const PolyMatrix& block = rep.block;
    std::size_t maxk = 0;
    if (block.rows() && block.cols()) maxk = generic_rank(block);
    rep.max_rank = rep.units + maxk;
    rep.min_rank = rep.units;
    if (maxk == 0) {
        rep.min_rank = rep.max_rank;
        return;
    }
    std::vector<std::size_t> levels{1};
    if (maxk >= 2) levels.push_back(2);
    if (maxk > 2) levels.push_back(maxk);
    for (std::size_t k : levels) {
        Stratum s;
        s.minor_order = k;
        Ideal di = determinantal_ideal(block, k);
        if (di.gens.empty()) continue;
        s.gb = buchberger(di, pair_guard);
        s.zero_dimensional = is_zero_dimensional(s.gb);
        if (s.zero_dimensional)
            s.variety = solve_zero_dim(di, pair_guard);
        rep.strata.push_back(std::move(s));
    }
    if (!rep.strata.empty() && rep.strata[0].minor_order == 1) {
        rep.condition_ideal = rep.strata[0].gb;
        if (rep.strata[0].gb.is_unit_ideal()) {
            // block never vanishes entirely; the minimum sits higher
            std::size_t k = 1;
            while (k < maxk) {
                GBasis g = buchberger(determinantal_ideal(block, k + 1), pair_guard);
                if (!g.is_unit_ideal()) break;
                ++k;
            }
            rep.min_rank = rep.units + k;
        } else {
            rep.min_rank_locus = rep.strata[0].variety;
        }
    }
}

}  // namespace

CaseReport run_case(const CaseSpec& spec, std::size_t pair_guard) {
    CaseReport rep;
    rep.quad_rank = spec.quad_rank;
    rep.case_index = spec.case_index;
    rep.ring = spec.ring;
    rep.block = PolyMatrix(spec.ring, 0, 0);

    if (spec.quad_rank == 0) {
        rep.method = Method::rcf;
        rep.consequences = PolyMatrix(spec.ring, 0, 22);
        rep.min_rank = rep.max_rank = 0;
        return rep;
    }

    rep.consequences = consequence_matrix(spec.relations());
    rep.cons_rows = rep.consequences.rows();
    const std::size_t nparams = spec.ring->nvars();

    if (nparams == 0) {
        rep.method = Method::rcf;
        auto [rcf, rank] = rcf_over_field(as_scalar_matrix(rep.consequences));
        (void)rcf;
        rep.units = rank;
        rep.min_rank = rep.max_rank = rank;
    } else if (nparams == 1) {
        rep.method = Method::hnf;
        rep.hnf = hnf_univariate(rep.consequences);
        BlockSplit split = split_unit_block(*rep.hnf);
        rep.units = split.units;
        rep.block = split.block;
        analyze_block(rep, pair_guard);
    } else {
        rep.method = Method::psf;
        rep.psf = partial_smith(rep.consequences);
        rep.units = rep.psf->r;
        rep.block = rep.psf->B;
        analyze_block(rep, pair_guard);
        if (spec.quad_rank == 2 && spec.case_index <= 2) {
            rep.ccf = column_canonical_form(rep.consequences);
            if (spec.case_index == 2) rep.mgb = module_gb(rep.consequences);
        }
    }
    rep.nilpotent_index3_generic = (rep.max_rank == 22);
    return rep;
}

namespace {

std::string variety_sorted_str(const Variety& v) {
    std::vector<std::string> pts;
    for (auto& p : v.points) pts.push_back(variety_point_str(p));
    std::sort(pts.begin(), pts.end());
    std::string s;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) s += ", ";
        s += pts[i];
    }
    return s;
}

}  // namespace

std::string CaseReport::text() const {
    std::ostringstream os;
    os << "Rank " << quad_rank << ", case " << case_index << " (method "
       << method_name(method) << ")\n";
    os << "  consequence matrix: " << cons_rows << " x " << cons_cols << "\n";
    os << "  rank range: [" << min_rank << ", " << max_rank << "]\n";
    if (condition_ideal) {
        os << "  condition ideal GB:";
        for (auto& e : condition_ideal->elems) os << " " << e.str() << ";";
        os << "\n";
    }
    if (min_rank_locus) {
        os << "  minimal rank locus: { " << variety_sorted_str(*min_rank_locus)
           << " }";
        bool has_alg = false;
        for (auto& p : min_rank_locus->points)
            for (auto& c : p)
                if (!c.is_rational()) has_alg = true;
        if (has_alg) os << "  (w^2 - w + 1 = 0)";
        os << "\n";
    }
    for (auto& s : strata) {
        os << "  DI_" << s.minor_order << " GB:";
        for (auto& e : s.gb.elems) os << " " << e.str() << ";";
        if (s.variety)
            os << "  V = { " << variety_sorted_str(*s.variety) << " }";
        else if (!s.zero_dimensional)
            os << "  (positive-dimensional)";
        os << "\n";
    }
    os << "  nilpotent of index 3 for generic parameters: "
       << (nilpotent_index3_generic ? "yes" : "no") << "\n";
    return os.str();
}

namespace {

nlohmann::json variety_json(const Variety& v) {
    nlohmann::json j;
    std::vector<std::string> pts;
    for (auto& p : v.points) pts.push_back(variety_point_str(p));
    std::sort(pts.begin(), pts.end());
    j["points"] = pts;
    j["unresolved"] = v.unresolved;
    j["positive_dimensional"] = v.positive_dimensional;
    return j;
}

nlohmann::json gb_json(const GBasis& g) {
    std::vector<std::string> elems;
    for (auto& e : g.elems) elems.push_back(e.str());
    return elems;
}

nlohmann::json report_json_obj(const CaseReport& r) {
    nlohmann::json j;
    j["rank"] = r.quad_rank;
    j["case"] = r.case_index;
    std::string vars(r.ring->vars.begin(), r.ring->vars.end());
    j["parameters"] = vars;
    j["method"] = method_name(r.method);
    j["consequence_shape"] = {r.cons_rows, r.cons_cols};
    j["min_rank"] = r.min_rank;
    j["max_rank"] = r.max_rank;
    j["identity_block"] = r.units;
    if (r.condition_ideal) j["condition_ideal_gb"] = gb_json(*r.condition_ideal);
    if (r.min_rank_locus) j["min_rank_locus"] = variety_json(*r.min_rank_locus);
    nlohmann::json strata = nlohmann::json::array();
    for (auto& s : r.strata) {
        nlohmann::json js;
        js["minor_order"] = s.minor_order;
        js["gb"] = gb_json(s.gb);
        js["zero_dimensional"] = s.zero_dimensional;
        if (s.variety) js["variety"] = variety_json(*s.variety);
        strata.push_back(js);
    }
    j["strata"] = strata;
    j["nilpotent_index3_generic"] = r.nilpotent_index3_generic;
    return j;
}

std::string relation_str(const std::vector<AlgNum>& coeff) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeff.size(); ++i) {
        if (coeff[i].is_zero()) continue;
        std::string cs = coeff[i].str();
        bool neg = cs.size() && cs[0] == '-' && cs.find(' ') == std::string::npos;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        std::string mag = neg ? cs.substr(1) : cs;
        if (mag != "1") {
            if (mag.find(' ') != std::string::npos) mag = "(" + mag + ")";
            os << mag << " ";
        }
        os << "phi o_" << (i + 1) << " phi";
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace

std::string CaseReport::json() const { return report_json_obj(*this).dump(2); }

SummaryTheorem summarize(unsigned quad_rank,
                         const std::vector<CaseReport>& reports) {
    SummaryTheorem th;
    th.quad_rank = quad_rank;
    if (reports.empty()) return th;
    th.min_rank = reports[0].min_rank;
    th.max_rank = reports[0].max_rank;
    for (auto& r : reports) {
        th.min_rank = std::min(th.min_rank, r.min_rank);
        th.max_rank = std::max(th.max_rank, r.max_rank);
        th.nilpotent_flags.emplace_back(r.case_index, r.nilpotent_index3_generic);
    }
    auto specs = enumerate_cases(quad_rank);
    for (auto& r : reports) {
        if (r.min_rank != th.min_rank) continue;
        const CaseSpec& spec = specs[r.case_index - 1];
        std::vector<std::vector<AlgNum>> pts;
        if (r.ring->nvars() == 0) {
            pts.push_back({});
        } else if (r.min_rank_locus) {
            pts = r.min_rank_locus->points;
        }
        std::vector<std::string> letters(pts.size());
        char next = 'a';
        for (std::size_t i = 0; i < pts.size(); ++i) {
            bool matched = false;
            for (std::size_t k = 0; k < i && !matched; ++k) {
                std::vector<AlgNum> cj;
                for (auto& c : pts[k]) cj.push_back(c.conj());
                if (cj == pts[i]) {
                    letters[i] = letters[k];
                    matched = true;
                }
            }
            if (!matched) letters[i] = std::string(1, next++);
        }
        for (std::size_t i = 0; i < pts.size(); ++i) {
            SummaryEntry e;
            e.case_index = r.case_index;
            e.label = std::to_string(r.case_index) +
                      (pts.size() > 1 ? letters[i] : "");
            e.point = pts[i];
            for (auto& c : pts[i])
                if (!c.is_rational()) e.conjugate_annotation = true;
            for (std::size_t row = 0; row < spec.relation_matrix.rows(); ++row) {
                std::vector<AlgNum> coeff;
                for (std::size_t col = 0; col < 4; ++col)
                    coeff.push_back(spec.relation_matrix.at(row, col).eval(pts[i]));
                e.relations.push_back(std::move(coeff));
            }
            th.minimal_relations.push_back(std::move(e));
        }
    }
    return th;
}

std::string SummaryTheorem::text() const {
    std::ostringstream os;
    os << "Rank " << quad_rank << " summary: consequence rank in ["
       << min_rank << ", " << max_rank << "]\n";
    os << "Relation sets attaining the minimal rank " << min_rank << ":\n";
    for (auto& e : minimal_relations) {
        os << "  " << e.label << ")";
        for (std::size_t i = 0; i < e.relations.size(); ++i) {
            os << (i ? ",  " : "  ") << "rho_" << (i + 1) << " = "
               << relation_str(e.relations[i]);
        }
        if (e.conjugate_annotation) os << "   (w^2 - w + 1 = 0)";
        os << "\n";
    }
    os << "Generic nilpotency of index 3:";
    for (auto& [c, f] : nilpotent_flags)
        os << " case " << c << ": " << (f ? "yes" : "no") << ";";
    os << "\n";
    return os.str();
}

FullReport run_all(std::size_t pair_guard) {
    FullReport out;
    for (unsigned rank = 0; rank <= 4; ++rank) {
        std::vector<CaseReport> reports;
        for (auto& spec : enumerate_cases(rank))
            reports.push_back(run_case(spec, pair_guard));
        if (rank >= 1 && rank <= 3)
            out.summaries.push_back(summarize(rank, reports));
        for (auto& r : reports) out.cases.push_back(std::move(r));
    }
    return out;
}

std::string full_report_json(const FullReport& r) {
    nlohmann::json j;
    nlohmann::json cases = nlohmann::json::array();
    for (auto& c : r.cases) cases.push_back(report_json_obj(c));
    j["cases"] = cases;
    nlohmann::json summaries = nlohmann::json::array();
    for (auto& s : r.summaries) {
        nlohmann::json js;
        js["rank"] = s.quad_rank;
        js["min_rank"] = s.min_rank;
        js["max_rank"] = s.max_rank;
        nlohmann::json rels = nlohmann::json::array();
        for (auto& e : s.minimal_relations) {
            nlohmann::json je;
            je["label"] = e.label;
            je["case"] = e.case_index;
            je["point"] = variety_point_str(e.point);
            std::vector<std::string> rs;
            for (auto& rel : e.relations) rs.push_back(relation_str(rel));
            je["relations"] = rs;
            je["conjugate_annotation"] = e.conjugate_annotation;
            rels.push_back(je);
        }
        js["minimal_relations"] = rels;
        nlohmann::json flags = nlohmann::json::array();
        for (auto& [c, f] : s.nilpotent_flags)
            flags.push_back({{"case", c}, {"nilpotent_index3_generic", f}});
        js["nilpotent_flags"] = flags;
        summaries.push_back(js);
    }
    j["summaries"] = summaries;
    return j.dump(2);
}

}  // namespace quadop
