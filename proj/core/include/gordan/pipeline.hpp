#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gordan/diophantine.hpp"
#include "gordan/generator_set.hpp"
#include "gordan/slices.hpp"

namespace gordan {

/// Worker cap for batch evaluations. Defaults to GORDAN_THREADS or 1; results
/// never depend on the setting.
void set_threads(int n);
int threads();

/// Monomial over a generator list: index -> positive exponent.
using GenMonomial = std::map<int, int>;

struct CandidateTransvectant {
  std::vector<int> solution;  // (alpha | beta | u | v | r) over the system
  GenMonomial U;              // non-invariant A-generators
  GenMonomial V;              // non-invariant B-generators
  int r = 0;
  int unit_gen = -1;  // >= 0: the candidate is that input generator itself
  std::vector<int> multidegree;
  int order = 0;
  std::string status = "kept";  // or pruned(<reason>)
  Recipe recipe;

  bool kept() const { return status == "kept"; }
  long total_degree() const {
    long t = 0;
    for (int d : multidegree) t += d;
    return t;
  }
};

struct Relation {
  enum class Shape { SinglePower, TwoFactor, InvariantMultiple, General };
  std::map<std::string, int> lead;
  std::vector<std::pair<Rat, std::map<std::string, int>>> rhs;
  Shape shape = Shape::General;

  std::string str() const;
};

struct CandidateFilters {
  /// Order-bound sanity pruner: discard when u + v >= max(a_i) + max(b_j).
  bool order_bound = true;
  /// Leading monomials of relations on the A (resp. B) side: a candidate
  /// whose U (resp. V) is divisible by one of them is dropped.
  std::vector<std::map<std::string, int>> lead_monomials_A;
  std::vector<std::map<std::string, int>> lead_monomials_B;
  /// Monomials lying in the ideal generated by invariants.
  std::vector<std::map<std::string, int>> invariant_ideal_A;
  std::vector<std::map<std::string, int>> invariant_ideal_B;
  /// Optional grade-based pruning, off by default; the pipeline never relies
  /// on it and results must be identical either way.
  bool grade_prune = false;

  static CandidateFilters from_relations(const std::vector<Relation>& rel_A,
                                         const std::vector<Relation>& rel_B);
};

/// Builds the two-row system from the non-invariant orders of A and B, takes
/// its Hilbert basis, and materializes one candidate per irreducible
/// solution. A and B must live in the same (joint) form space. Invariant
/// generators pass through as unit candidates.
std::vector<CandidateTransvectant> candidate_transvectants(
    const GeneratorSet& A, const GeneratorSet& B, const CandidateFilters& filters);

/// Expands U and V as polynomial products and applies the transvectant.
Covariant evaluate_candidate(const CandidateTransvectant& c, const GeneratorSet& A,
                             const GeneratorSet& B);

struct EvaluatedCandidate {
  Covariant cov;
  std::string provenance;
  int r = 0;
  std::string tie_break;  // recipe string
};

struct SliceDeficiency {
  SliceKey slice;
  Int expected;
  std::size_t achieved;
};

struct MinimizeResult {
  GeneratorSet set;
  std::vector<SliceDeficiency> deficiencies;
};

/// Degree-by-degree reduction: processes slices in increasing total degree
/// then order; in each slice spans the products of previously accepted
/// generators first and keeps a candidate exactly when it enlarges the rank,
/// until the slice reaches its Cayley-Sylvester dimension.
MinimizeResult minimize(const FormSpacePtr& space,
                        std::vector<EvaluatedCandidate> candidates,
                        std::optional<long> degree_bound = std::nullopt);

struct JointBasisResult {
  GeneratorSet set;
  std::size_t candidates_before_filters = 0;
  std::size_t candidates_after_filters = 0;
  std::vector<SliceDeficiency> deficiencies;
};

/// Gordan's joint algorithm: minimal basis of Cov(V1 + V2) from bases of
/// Cov(V1) and Cov(V2), with optional relation-driven pruning.
JointBasisResult joint_basis(const GeneratorSet& V1_basis,
                             const GeneratorSet& V2_basis,
                             const std::vector<Relation>& relations1 = {},
                             const std::vector<Relation>& relations2 = {},
                             bool enable_optional_pruners = true);

/// Quadratic adjunction: minimal basis of Cov(V + S2) from a basis of Cov(V);
/// candidates are (h_i, u^p)_{2p-1}, (h_i, u^p)_{2p} and, for odd-order
/// pairs, (h_i h_j, u^p)_{2p}.
JointBasisResult adjoin_s2(const GeneratorSet& V_basis);

struct SimpleBasisOptions {
  bool grade_prune = false;
  bool enable_optional_pruners = true;
};

/// Gordan's algorithm for a single binary form S_n (n > 2), given covariant
/// bases of the smaller orders 2n-4k that occur along the iteration.
JointBasisResult simple_basis(int n, const std::map<int, GeneratorSet>& known_bases,
                              const SimpleBasisOptions& opts = {});

/// All linear relations among generator monomials inside one slice, as a
/// kernel basis, classified against a declared generator ranking (first name
/// is largest).
std::vector<Relation> find_relations(const GeneratorSet& G, const SliceKey& slice,
                                     const std::vector<std::string>& ranking = {});

struct VerifyReport {
  long bound = 0;
  std::vector<SliceDeficiency> deficiencies;
  /// name -> removing it creates a deficiency at its own slice
  std::vector<std::pair<std::string, bool>> generator_needed;
  bool all_full() const { return deficiencies.empty(); }
  bool minimal() const;
};

/// Checks that every bigraded slice up to the total-degree bound is spanned
/// by monomials in G, and that each generator is needed at its own slice.
VerifyReport verify_generation(const GeneratorSet& G, long bound,
                               bool check_minimality = true);

/// True when the monomial `m` (name -> exponent) divides the monomial given
/// by exponents over `names`.
bool monomial_divides(const std::map<std::string, int>& m,
                      const std::map<std::string, int>& candidate);

/// Covariant bases of small single forms (n in 2..6, 8), built through the
/// simple algorithm and cached for the process lifetime.
const GeneratorSet& builtin_basis(int n);

}  // namespace gordan
