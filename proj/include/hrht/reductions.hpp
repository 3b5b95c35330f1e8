#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hrht/instance.hpp"

namespace hrht {

// Negation-free CNF with exactly three distinct variables per clause.
struct Mono3SatFormula {
  int num_vars = 0;
  std::vector<std::array<int, 3>> clauses;  // 0-based variable indices, input order

  [[nodiscard]] std::vector<int> occurrences() const;
};

class FormulaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// `mono3sat <n>` followed by one clause of three distinct 1-based indices per line.
[[nodiscard]] Mono3SatFormula parse_sat(std::string_view text);
[[nodiscard]] std::string serialize_sat(const Mono3SatFormula& f);
// Throws FormulaError on a repeated or out-of-range index.
void validate(const Mono3SatFormula& f);

enum class SatMode { one_in_three, nae };

using Assignment = std::vector<bool>;

[[nodiscard]] bool satisfies(const Mono3SatFormula& f, const Assignment& x, SatMode mode);
// Every satisfying assignment, in increasing binary order (variable 0 is the low bit).
// At most 24 variables.
[[nodiscard]] std::vector<Assignment> sat_solutions(const Mono3SatFormula& f, SatMode mode);

struct VertexOrigin {
  std::string role;   // "a", "b", "d", "v", "w" or "f"
  int variable = -1;  // 0-based, -1 when not tied to a variable
  int clause = -1;    // 0-based, -1 for per-variable vertices
  int slot = -1;      // index of a d- or f-vertex inside its clause gadget
};

struct GadgetOutput {
  InstanceDocument document;  // costs are set for the cost gadget only
  // Ordering with ties over hospitals from which every resident list is a restriction.
  std::optional<std::vector<std::vector<Hospital>>> hospital_master_list;
  // Ordering with ties over residents from which every hospital list is a restriction.
  std::optional<std::vector<std::vector<Resident>>> resident_master_list;
  // Strict hospital axis on which every resident list is single-peaked.
  std::optional<std::vector<Hospital>> single_peaked_axis;
  std::vector<VertexOrigin> resident_origin;
  std::vector<VertexOrigin> hospital_origin;

  [[nodiscard]] const Instance& instance() const { return document.instance; }
};

// Cost gadget: a_p/v_p per variable (cost 0), b/d residents and w per clause
// (cost 1), all quotas 1. Requires every variable to occur at most three times.
[[nodiscard]] GadgetOutput gen_mincost_instance(const Mono3SatFormula& f);

// 1-or-2 capacity gadget. Requires every variable to occur exactly four times.
// With resident_perfect, each d-resident gets a private fallback hospital f.
[[nodiscard]] GadgetOutput gen_cap12_instance(const Mono3SatFormula& f, bool resident_perfect);

struct CertificateReport {
  std::optional<bool> hospital_master_list;
  std::optional<bool> resident_master_list;
  std::optional<bool> single_peaked;
  std::vector<std::string> violations;

  [[nodiscard]] bool ok() const { return violations.empty(); }
};

// Checks every certificate present. Throws std::invalid_argument if none is.
[[nodiscard]] CertificateReport verify_certificates(const GadgetOutput& g);

// Truth values read back from a cost-gadget matching: X_p is true when its
// b-residents sit at their clause hospitals. nullopt when occurrences disagree.
[[nodiscard]] std::optional<Assignment> decode_one_in_three(const Mono3SatFormula& f,
                                                            const GadgetOutput& g,
                                                            const Matching& m);
// Truth values read back from capacity-gadget quotas: X_i is true when its
// v-hospitals have quota 2. nullopt when occurrences disagree.
[[nodiscard]] std::optional<Assignment> decode_nae(const Mono3SatFormula& f, const GadgetOutput& g,
                                                   const QuotaVector& quotas);

}  // namespace hrht
