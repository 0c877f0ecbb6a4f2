#pragma once

#include <string>
#include <vector>

#include "gordan/covariant.hpp"
#include "gordan/exact_matrix.hpp"
#include "gordan/molecule.hpp"

namespace gordan {

/// Transvectant of index r in the convention
///   (f,g)_r = (n-r)! (p-r)! [Omega^r f(x_a) g(x_b)] at x_a = x_b = x,
/// and 0 when r exceeds min(n,p). Computed by the closed bidifferential
/// formula; order n+p-2r, multidegrees add.
Covariant transvectant(const Covariant& f, const Covariant& g, int r);
Covariant transvectant(const BinaryForm& f, const BinaryForm& g, int r);

/// Same covariant evaluated literally as Omega^r sigma_a^{n-r} sigma_b^{p-r}
/// on duplicated variables. Slower; serves as the ground-truth cross-check.
Covariant transvectant_operator_route(const Covariant& f, const Covariant& g, int r);

/// Display scaling options: the internal convention above, or the classical
/// one that divides by n! p!.
enum class Normalization { Paper, Gordan };
Rat normalization_scale(Normalization norm, int n, int p, int r);

/// Applies the product of Cayley operators (one power per edge) followed by
/// the polarization operators sigma^(free valence) to the product of the
/// given forms on duplicated variables. Zero when a free valence is negative.
Covariant evaluate_molecule(const Molecule& m, const std::vector<BinaryForm>& forms);

/// Triangle molecule on a single covariant base with equal edge weights; the
/// only molecule shape the pipeline itself needs.
Covariant triangle_invariant(const Covariant& base, int weight);

enum class IdentityKind { Syzygy1, Syzygy2, Syzygy3, BinomExpand, Stroh };

struct IdentityParams {
  // orders of the participating atoms (1, 3, 3+r-checks or 4 of them)
  std::vector<int> orders;
  int r = 1;            // edge weight / index where applicable
  long seed = 1;        // randomization of the forms
  // Stroh only:
  int g = 0;
  int k1 = 0, k2 = 0, k3 = 0;
};

/// Exact check of one of the operator syzygies, the binomial molecule
/// expansion, or the Stroh identity on symbolic u-variables.
bool identity_check(IdentityKind kind, const IdentityParams& params);

struct GradeQuery {
  int e0 = 0, e1 = 0, e2 = 0;
  int n = 0;
};

/// Lower bound on the grade of the degree-three triangle D(e0,e1,e2) over
/// S_n: max of ceil(2w/3) for w <= n, n - floor(w/3) for w > n, and e0+1 when
/// e0 <= n/2, e1+e2 > e0/2 and not e0=e1=e2=n/2. Advisory only.
int grade_bound(const GradeQuery& q);

struct ReassociateBasis {
  // admissible index pairs, in enumeration order
  std::vector<std::pair<int, int>> left_pairs;   // ((f,g)_{j1}, h)_{j2}
  std::vector<std::pair<int, int>> right_pairs;  // (f, (g,h)_{i1})_{i2}
  // matrix[l][r]: coordinates of left family member l in the right family
  std::vector<std::vector<Rat>> matrix;
};

/// Exact change of basis between the two iterated-transvectant bases of the
/// equivariant maps S_n x S_p x S_q -> S_k where k = n+p+q-2w; computed by
/// evaluating both families on generic forms and solving exactly.
ReassociateBasis reassociate_basis(int n, int p, int q, int w);

}  // namespace gordan
