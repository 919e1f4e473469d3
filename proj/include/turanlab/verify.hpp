#pragma once

#include "turanlab/bigint.hpp"
#include "turanlab/oracle.hpp"
#include "turanlab/pattern.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace turanlab {

// One audited n. For theorem targets: oracle_value = exact ex(n,H,F),
// formula_value = the target's closed form, gap = oracle - formula.
// For lemma targets the fields are reused with per-target semantics spelled
// out in the report notes (violations land in `gap`, counterexamples in
// `witnesses`).
struct AuditRow {
    int n = 0;
    BigInt oracle_value;
    BigInt formula_value;
    BigInt gap;
    std::vector<std::string> witnesses;
};

enum class Verdict { pass, pass_above_threshold, violation };

std::string verdict_name(Verdict v);

struct AuditReport {
    std::string target;
    nlohmann::json params; // flat map of the audited parameters
    std::vector<AuditRow> rows;
    std::optional<int> equality_threshold;
    Verdict verdict = Verdict::pass;
    std::vector<std::string> notes;

    nlohmann::json to_json() const; // deterministic: no timing fields
    std::string to_csv() const;     // "n,oracle_value,formula_value,gap"
};

struct TheoremParams {
    int a = 1, b = 1;
    std::optional<int> c, d, k;
    std::optional<Pattern> forbidden; // cce's F
};

// Targets: gyww (triangle-forbidden bipartite optimum), cce (weakly
// F-Turán-good for a 3-chromatic F with a color-critical edge), fketto
// (2-fan-forbidden K+ optimum), klikks (clique count under a forbidden
// double star; equality is unconditional), neww (double star vs double star
// rate bounds), cnc (small-center double star forbidden; exact optimum).
AuditReport audit_theorem(const std::string& target, const TheoremParams& params, int n_min,
                          int n_max, const OracleOptions& options = {});

// Targets: ahs (star-or-matching bound over all graphs), triangle_free_edges
// (|E| <= Delta(n-Delta) over triangle-free graphs), vc (vertex-cover edge
// bound over 2-fan-free graphs), efgg (edge maximum over 2-fan-free graphs).
AuditReport audit_lemma(const std::string& target, int n_max, const OracleOptions& options = {});

} // namespace turanlab
