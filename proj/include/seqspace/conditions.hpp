#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seqspace/sequence.hpp"
#include "seqspace/triangle.hpp"

namespace seqspace {

/// The twelve summability conditions, in the order they are catalogued.
/// K_1 = {k : p_k <= 1}, K_2 = {k : p_k > 1}, p'_k = p_k/(p_k - 1) on K_2.
enum class ConditionId {
  c4_4,   // sup_F sup_{k in K1} |sum_{n in F} a_nk|^(p_k)
  c4_5,   // exists L: sup_F sum_{k in K2} |sum_{n in F} a_nk / L|^(p'_k)
  c4_6,   // lim_n a_nk = 0 for every k
  c4_7,   // forall L: sup_n sup_{k in K1} |a_nk L|^(p_k)
  c4_8,   // forall L: sup_n sum_{k in K2} |a_nk L|^(p'_k)
  c4_9,   // sup_n sup_{k in K1} |a_nk|^(p_k)
  c4_10,  // exists L: sup_n sum_{k in K2} |a_nk / L|^(p'_k)
  c4_11,  // exists (alpha_k): lim_n a_nk = alpha_k for every k
  c4_12,  // exists (alpha_k) forall L: sup_n sup_{k in K1} (|a_nk - alpha_k| L)^(p_k)
  c4_13,  // exists (alpha_k) forall L: sup_n sum_{k in K2} (|a_nk - alpha_k| L)^(p'_k)
  c4_14,  // exists L: sup_n sup_{k in K1} |a_nk / L|^(p_k)
  c4_15,  // exists L: sup_n sum_{k in K2} |a_nk / L|^(p'_k)
};

const char* condition_name(ConditionId id) noexcept;
std::string condition_description(ConditionId id);

enum class Verdict { holds, fails, inconclusive };
enum class Method { exact_subset, interval_heuristic };

const char* verdict_name(Verdict v) noexcept;
const char* method_name(Method m) noexcept;

/// Three-valued window verdict.  sup_value is the computed window supremum
/// (at witness_l for the exists-L shapes).  method records whether every
/// ingredient was evaluated exactly (subset enumeration, exact support
/// certificates); any heuristic ingredient, including the inference from a
/// finite window to the infinite statement, downgrades it.  inconclusive
/// can only be reported with the interval-heuristic method.
struct ConditionVerdict {
  Verdict holds = Verdict::inconclusive;
  std::optional<unsigned long> witness_l;
  double sup_value = 0.0;
  Method method = Method::interval_heuristic;
  std::string note;
  std::vector<double> alpha;  // estimated column limits for 4.11-4.13 shapes
};

struct ConditionOptions {
  std::size_t oracle_budget = 12;    // exact subset enumeration while the row
                                     // count stays within this bound
  bool force_heuristic = false;      // skip enumeration even within budget
  double divergence_bound = 1e12;    // window values beyond this count as
                                     // policy divergence
  double growth_factor = 4.0;        // half-window growth ratio that reads as
                                     // divergence
  double plateau_factor = 1.1;       // half-window growth ratio that reads as
                                     // a stabilized supremum
  double tol = 1e-10;
  unsigned max_l_exponent = 16;      // L grid: 2^0 .. 2^max_l_exponent
  unsigned heuristic_restarts = 64;  // random subsets seeding the pool
  std::uint64_t seed = 0x633dc0de5eedULL;
};

/// Evaluates one condition over a dense window (rows indexed by the outer
/// variable, columns by the exponent index).
ConditionVerdict check_condition(ConditionId id, const DenseWindow<double>& a,
                                 const ExponentSequence& p,
                                 const ConditionOptions& opts = {});

/// sup_n |v_n|^(p_n) over a plain sequence, with the same growth-based
/// verdict policy.  Used for scalar battery members.
ConditionVerdict sup_sequence_power(const std::vector<double>& v,
                                    const ExponentSequence& p,
                                    const ConditionOptions& opts = {});

/// Subset supremum helpers exposed for the oracle-vs-heuristic tests:
/// objective is sup_{k in K1} |sum_{n in F} a_nk|^(p_k) for kind c4_4 and
/// sum_{k in K2} |sum_{n in F} a_nk / L|^(p'_k) for kind c4_5.
double subset_sup_exact(ConditionId kind, const DenseWindow<double>& a,
                        const ExponentSequence& p, double L,
                        std::size_t row_count);
double subset_sup_heuristic(ConditionId kind, const DenseWindow<double>& a,
                            const ExponentSequence& p, double L,
                            std::size_t row_count,
                            const ConditionOptions& opts = {});

}  // namespace seqspace
