#ifndef LEIB_IO_HPP
#define LEIB_IO_HPP

#include <json.hpp>

#include "leib/families.hpp"
#include "leib/theorems.hpp"

namespace leib {

using Json = nlohmann::ordered_json;

/// Algebra file format:
///   {"field": "Q" | {"GF": p}, "dim": n, "basis": [names...],
///    "products": [{"i": i, "j": j, "terms": [{"k": k, "c": "scalar"}]}]}
/// Omitted pairs are zero. Duplicate (i, j) entries, duplicate k terms,
/// out-of-range indices and malformed scalars are rejected with precise
/// diagnostics. parse(serialize(L)) == L.
LeibnizAlgebra parse_algebra(const std::string &text);
LeibnizAlgebra algebra_from_json(const Json &j);
Json algebra_to_json(const LeibnizAlgebra &l);
std::string serialize_algebra(const LeibnizAlgebra &l);

/// Linear combinations of basis names, e.g. "a2" or "a2-a" or "2a+1/3b",
/// comma-separated. Used by the quotient command's ideal argument.
Vec parse_element(const LeibnizAlgebra &l, const std::string &text);
std::vector<Vec> parse_element_list(const LeibnizAlgebra &l, const std::string &text);

Json subspace_json(const Subspace &s);
Json vec_json(const Vec &v);

struct AnalyzeOptions {
    std::uint64_t seed = 0;
    std::uint64_t budget = 1000000;
    std::uint64_t samples = 1000;
};

/// Full invariant report: identity check, Lie flag, series, kernel, centre,
/// nilradical, radical, CT verdict. Subspaces appear in canonical form, so
/// output is byte-stable for a fixed input and seed.
Json analyze_report(const LeibnizAlgebra &l, const AnalyzeOptions &opt = {});

Json census_report_json(const CensusReport &rep);

struct VerifyOptions {
    std::string suite = "all";
    std::uint64_t seed = 0;
    std::uint64_t budget = 1000000;
    std::uint64_t samples = 1000;
};

/// Runs the named verification suite (all, lemma1, lemmas, theorem1, solv,
/// solv2, fac, main) against one algebra. Checks not applicable to the input
/// (wrong field kind, out of budget, hypotheses unmet) report "skip" with
/// the reason. Returns the machine-readable report.
Json verify_report(const LeibnizAlgebra &l, const VerifyOptions &opt = {});

/// Number of failed checks in a verify/analyze report.
int report_failures(const Json &report);

/// Plain-text rendering of any report produced above.
std::string render_text(const Json &report);

} // namespace leib

#endif
