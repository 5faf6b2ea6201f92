#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quadop/matforms.hpp"
#include "quadop/operad.hpp"

namespace quadop {

// One row pattern from the table of relation matrices in row canonical form:
// quad_rank leading 1s, free entries filled with parameters a, b, c, d in
// row-major order.
struct CaseSpec {
    unsigned quad_rank = 0;
    unsigned case_index = 0;  // 1-based within the rank
    RingPtr ring;             // the case's parameter ring (may be empty)
    PolyMatrix relation_matrix;  // quad_rank x 4

    std::vector<Relation> relations() const;
};

std::vector<CaseSpec> enumerate_cases(unsigned quad_rank);
CaseSpec get_case(unsigned quad_rank, unsigned case_index);

enum class Method { rcf, hnf, psf, module_gb };
std::string method_name(Method m);

struct Stratum {
    std::size_t minor_order = 0;  // k: stratum boundary V(DI_k(block))
    GBasis gb;
    bool zero_dimensional = false;
    std::optional<Variety> variety;
};

struct CaseReport {
    unsigned quad_rank = 0, case_index = 0;
    RingPtr ring;
    std::size_t cons_rows = 0, cons_cols = 22;
    Method method = Method::rcf;
    std::size_t min_rank = 0, max_rank = 0;
    std::size_t units = 0;  // rank of the identity part of the normal form
    std::optional<GBasis> condition_ideal;  // entries of the block, DI_1
    std::optional<Variety> min_rank_locus;
    std::vector<Stratum> strata;
    bool nilpotent_index3_generic = false;

    // computation artifacts
    PolyMatrix consequences;
    PolyMatrix block;  // non-unit block of the chosen normal form
    std::optional<PSFResult> psf;
    std::optional<ModuleGB> mgb;       // reduced module GB (rank 2 case 2)
    std::optional<PolyMatrix> ccf;     // column canonical form (rank 2 cases 1-2)
    std::optional<PolyMatrix> hnf;

    std::string text() const;
    std::string json() const;
};

// Builds the consequence matrix and reduces it with the method selected by
// parameter count (0: RCF, 1: HNF, >= 2: partial Smith form, with a module-GB
// cross-check for rank 2 cases 1-2), then derives the rank stratification
// from the determinantal ideals of the non-unit block.
CaseReport run_case(const CaseSpec& spec, std::size_t pair_guard = 100000);

struct SummaryEntry {
    std::string label;             // "1a", "1b", ..., "4"
    unsigned case_index = 0;
    std::vector<AlgNum> point;     // empty for parameterless cases
    // One coefficient vector (length 4) per relation in the case.
    std::vector<std::vector<AlgNum>> relations;
    bool conjugate_annotation = false;  // point involves w, w^2 - w + 1 = 0
};

struct SummaryTheorem {
    unsigned quad_rank = 0;
    std::size_t min_rank = 0, max_rank = 0;
    std::vector<SummaryEntry> minimal_relations;
    std::vector<std::pair<unsigned, bool>> nilpotent_flags;  // per case

    std::string text() const;
};

SummaryTheorem summarize(unsigned quad_rank,
                         const std::vector<CaseReport>& reports);

// Full reproduction: all cases of ranks 0-4 plus the three summary theorems.
struct FullReport {
    std::vector<CaseReport> cases;
    std::vector<SummaryTheorem> summaries;  // ranks 1, 2, 3
};
FullReport run_all(std::size_t pair_guard = 100000);

std::string full_report_json(const FullReport& r);

}  // namespace quadop
