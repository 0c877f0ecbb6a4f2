#include "gordan/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <thread>

#include "gordan/rank_tracker.hpp"
#include "gordan/transvectant.hpp"

namespace gordan {

namespace {
int g_threads = 0;
}

void set_threads(int n) { g_threads = std::max(0, n); }

int threads() {
  if (g_threads > 0) return g_threads;
  if (const char* env = std::getenv("GORDAN_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 1;
}

namespace {

/// Runs fn(i) for i in [0, n) on up to threads() workers; output slots are
/// written by index so results do not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  int workers = std::min<std::size_t>(threads(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        while (true) {
          std::size_t i = next.fetch_add(1);
          if (i >= n) break;
          fn(i);
        }
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::map<std::string, int> monomial_names(const GenMonomial& m,
                                          const GeneratorSet& set) {
  std::map<std::string, int> out;
  for (const auto& [idx, e] : m) out[set.gens()[idx].name] = e;
  return out;
}

// recipes are emitted inline (slot forms only) so serialized sets re-evaluate
// without external context
Recipe monomial_recipe(const GenMonomial& m, const GeneratorSet& set) {
  std::vector<std::pair<Recipe, unsigned>> factors;
  for (const auto& [idx, e] : m) {
    const auto& g = set.gens()[idx];
    Recipe base = g.cov.recipe() ? *g.cov.recipe() : Recipe::gen_ref(g.name);
    factors.emplace_back(std::move(base), static_cast<unsigned>(e));
  }
  return Recipe::prod(std::move(factors));
}

}  // namespace

bool monomial_divides(const std::map<std::string, int>& m,
                      const std::map<std::string, int>& candidate) {
  for (const auto& [name, e] : m) {
    auto it = candidate.find(name);
    if (it == candidate.end() || it->second < e) return false;
  }
  return true;
}

std::string Relation::str() const {
  auto mono = [](const std::map<std::string, int>& m) {
    if (m.empty()) return std::string("1");
    std::ostringstream os;
    bool first = true;
    for (const auto& [n, e] : m) {
      if (!first) os << "*";
      first = false;
      os << n;
      if (e > 1) os << "^" << e;
    }
    return os.str();
  };
  std::ostringstream os;
  os << mono(lead) << " = ";
  if (rhs.empty()) {
    os << "0";
  } else {
    bool first = true;
    for (const auto& [c, m] : rhs) {
      if (!first) os << (c >= 0 ? " + " : " - ");
      else if (c < 0) os << "-";
      first = false;
      Rat a = c < 0 ? Rat(-c) : c;
      if (a != 1) os << a.get_str() << "*";
      os << mono(m);
    }
  }
  return os.str();
}

CandidateFilters CandidateFilters::from_relations(const std::vector<Relation>& rel_A,
                                                  const std::vector<Relation>& rel_B) {
  CandidateFilters f;
  auto classify = [](const std::vector<Relation>& rels,
                     std::vector<std::map<std::string, int>>& leads,
                     std::vector<std::map<std::string, int>>& ideal) {
    for (const auto& r : rels) {
      switch (r.shape) {
        case Relation::Shape::SinglePower:
        case Relation::Shape::TwoFactor:
          leads.push_back(r.lead);
          break;
        case Relation::Shape::InvariantMultiple:
          ideal.push_back(r.lead);
          break;
        case Relation::Shape::General:
          break;  // not usable as a rewriting filter
      }
    }
  };
  classify(rel_A, f.lead_monomials_A, f.invariant_ideal_A);
  classify(rel_B, f.lead_monomials_B, f.invariant_ideal_B);
  return f;
}

std::vector<CandidateTransvectant> candidate_transvectants(
    const GeneratorSet& A, const GeneratorSet& B, const CandidateFilters& filters) {
  if (!A.space()->same_as(*B.space()))
    throw UsageError("candidate families must live in the same joint space");
  const auto& space = A.space();

  std::vector<int> idxA, idxB;  // indices of non-invariant generators
  DiophantineSystem sys;
  for (std::size_t i = 0; i < A.size(); ++i)
    if (A.gens()[i].cov.order() > 0) {
      idxA.push_back(static_cast<int>(i));
      sys.row1.push_back(A.gens()[i].cov.order());
    }
  for (std::size_t j = 0; j < B.size(); ++j)
    if (B.gens()[j].cov.order() > 0) {
      idxB.push_back(static_cast<int>(j));
      sys.row2.push_back(B.gens()[j].cov.order());
    }
  if (sys.row1.empty() || sys.row2.empty())
    throw UsageError("each family needs at least one non-invariant covariant");

  int max_a = *std::max_element(sys.row1.begin(), sys.row1.end());
  int max_b = *std::max_element(sys.row2.begin(), sys.row2.end());

  auto basis = hilbert_basis(sys);
  std::vector<CandidateTransvectant> out;
  out.reserve(basis.solutions.size() + A.size() + B.size());

  for (const auto& sol : basis.solutions) {
    CandidateTransvectant c;
    c.solution = sol;
    std::size_t p = idxA.size(), q = idxB.size();
    long units = 0;
    for (std::size_t i = 0; i < p; ++i)
      if (sol[i]) {
        c.U[idxA[i]] = sol[i];
        units += sol[i];
      }
    for (std::size_t j = 0; j < q; ++j)
      if (sol[p + j]) {
        c.V[idxB[j]] = sol[p + j];
        units += sol[p + j];
      }
    c.r = sol[p + q + 2];
    int u = sol[p + q], v = sol[p + q + 1];
    c.order = u + v;
    c.multidegree.assign(space->summands(), 0);
    for (const auto& [idx, e] : c.U)
      for (int s = 0; s < space->summands(); ++s)
        c.multidegree[s] += e * A.gens()[idx].cov.multidegree()[s];
    for (const auto& [idx, e] : c.V)
      for (int s = 0; s < space->summands(); ++s)
        c.multidegree[s] += e * B.gens()[idx].cov.multidegree()[s];

    if (c.r == 0 && units == 1) {
      c.unit_gen = c.U.empty() ? -1 : c.U.begin()->first;
      bool from_A = !c.U.empty();
      int gi = from_A ? c.U.begin()->first : c.V.begin()->first;
      const auto& g = (from_A ? A : B).gens()[gi];
      c.unit_gen = gi;
      c.recipe = g.cov.recipe() ? *g.cov.recipe() : Recipe::gen_ref(g.name);
      if (!from_A) c.unit_gen = static_cast<int>(A.size()) + gi;
      out.push_back(std::move(c));
      continue;
    }
    c.recipe =
        Recipe::trans(monomial_recipe(c.U, A), monomial_recipe(c.V, B), c.r);

    // (i) order-bound sanity pruner
    if (filters.order_bound && u + v >= max_a + max_b) {
      c.status = "pruned(order-bound)";
      out.push_back(std::move(c));
      continue;
    }
    // (ii) divisibility by relation leading monomials
    auto U_names = monomial_names(c.U, A);
    auto V_names = monomial_names(c.V, B);
    bool pruned = false;
    for (const auto& m : filters.lead_monomials_A)
      if (monomial_divides(m, U_names)) {
        c.status = "pruned(relation-lead)";
        pruned = true;
        break;
      }
    if (!pruned)
      for (const auto& m : filters.lead_monomials_B)
        if (monomial_divides(m, V_names)) {
          c.status = "pruned(relation-lead)";
          pruned = true;
          break;
        }
    // (iii) invariant-ideal pruning
    if (!pruned) {
      for (const auto& m : filters.invariant_ideal_A)
        if (monomial_divides(m, U_names)) {
          c.status = "pruned(invariant-ideal)";
          pruned = true;
          break;
        }
      if (!pruned)
        for (const auto& m : filters.invariant_ideal_B)
          if (monomial_divides(m, V_names)) {
            c.status = "pruned(invariant-ideal)";
            pruned = true;
            break;
          }
    }
    out.push_back(std::move(c));
  }

  // invariant members of A and B are generators in their own right
  for (std::size_t i = 0; i < A.size(); ++i)
    if (A.gens()[i].cov.order() == 0) {
      CandidateTransvectant c;
      c.unit_gen = static_cast<int>(i);
      c.U[static_cast<int>(i)] = 1;
      c.multidegree = A.gens()[i].cov.multidegree();
      c.order = 0;
      c.recipe = A.gens()[i].cov.recipe() ? *A.gens()[i].cov.recipe()
                                          : Recipe::gen_ref(A.gens()[i].name);
      out.push_back(std::move(c));
    }
  for (std::size_t j = 0; j < B.size(); ++j)
    if (B.gens()[j].cov.order() == 0) {
      CandidateTransvectant c;
      c.unit_gen = static_cast<int>(A.size() + j);
      c.V[static_cast<int>(j)] = 1;
      c.multidegree = B.gens()[j].cov.multidegree();
      c.order = 0;
      c.recipe = B.gens()[j].cov.recipe() ? *B.gens()[j].cov.recipe()
                                          : Recipe::gen_ref(B.gens()[j].name);
      out.push_back(std::move(c));
    }
  return out;
}

Covariant evaluate_candidate(const CandidateTransvectant& c, const GeneratorSet& A,
                             const GeneratorSet& B) {
  const auto& space = A.space();
  if (c.unit_gen >= 0) {
    int gi = c.unit_gen;
    const Covariant& g = gi < static_cast<int>(A.size())
                             ? A.gens()[gi].cov
                             : B.gens()[gi - A.size()].cov;
    return g;
  }
  auto product = [&](const GenMonomial& m, const GeneratorSet& from) {
    Covariant acc =
        Covariant::from_value(space, MultiPoly::constant(space->vars(), 1));
    for (const auto& [idx, e] : m)
      for (int i = 0; i < e; ++i) acc = acc * from.gens()[idx].cov;
    return acc;
  };
  Covariant U = product(c.U, A);
  Covariant V = product(c.V, B);
  Covariant t = transvectant(U, V, c.r);
  if (!t.is_zero() &&
      (t.order() != c.order || t.multidegree() != c.multidegree))
    throw InternalError("candidate bookkeeping mismatch after evaluation");
  t.set_recipe(c.recipe);
  return t;
}

namespace {

struct AcceptedGen {
  std::vector<int> deg;
  int order;
  long total;
  MultiPoly source;
  // max of order/total over this and later gens in the sorted usable list;
  // 2*longs to stay integral: stored as ceil bound on order per unit degree
  long max_suffix_order_per_degree = 0;
};

/// DFS over monomials in `gens` matching the remaining budget; every complete
/// monomial with >= min_factors factors is offered to the tracker. Returns
/// true as soon as the tracker reaches `target`.
bool span_monomials(RankTracker& tracker, const SliceBasis& basis,
                    const std::vector<AcceptedGen>& gens, std::size_t idx,
                    std::vector<int> rem_deg, int rem_order, long rem_total,
                    const MultiPoly& partial, int factors, int min_factors,
                    std::size_t target) {
  if (rem_total == 0) {
    if (rem_order != 0 || factors < min_factors) return false;
    tracker.add(basis.row_of(partial));
    return tracker.rank() >= target;
  }
  if (idx == gens.size()) return false;
  // the remaining order must be reachable by the remaining degree budget
  if (rem_order > rem_total * gens[idx].max_suffix_order_per_degree) return false;
  const auto& g = gens[idx];
  int emax = static_cast<int>(rem_total / g.total);
  for (std::size_t s = 0; s < rem_deg.size() && emax > 0; ++s)
    if (g.deg[s] > 0) emax = std::min(emax, rem_deg[s] / g.deg[s]);
  if (g.order > 0) emax = std::min(emax, rem_order / g.order);
  MultiPoly cur = partial;
  auto deg = rem_deg;
  int order = rem_order;
  long total = rem_total;
  for (int e = 0; e <= emax; ++e) {
    if (e > 0) {
      cur = (cur * g.source).primitive_part();
      for (std::size_t s = 0; s < deg.size(); ++s) deg[s] -= g.deg[s];
      order -= g.order;
      total -= g.total;
    }
    if (span_monomials(tracker, basis, gens, idx + 1, deg, order, total, cur,
                       factors + e, min_factors, target))
      return true;
  }
  return false;
}

/// Spans a slice by monomials in `gens`, early-exiting at `target` rank.
void span_slice(RankTracker& tracker, const SliceBasis& basis,
                const std::vector<AcceptedGen>& all, const SliceKey& key,
                int min_factors, std::size_t target,
                const FormSpacePtr& space) {
  if (tracker.rank() >= target) return;
  std::vector<AcceptedGen> usable;
  for (const auto& g : all) {
    if (g.total > key.total_degree() || g.order > key.order) continue;
    if (min_factors >= 2 && g.total >= key.total_degree()) continue;
    bool fits = true;
    for (std::size_t s = 0; s < g.deg.size(); ++s)
      fits = fits && g.deg[s] <= key.multidegree[s];
    if (fits) usable.push_back(g);
  }
  std::sort(usable.begin(), usable.end(),
            [](const AcceptedGen& a, const AcceptedGen& b) {
              if (a.total != b.total) return a.total > b.total;
              if (a.order != b.order) return a.order > b.order;
              return a.deg < b.deg;
            });
  long suffix = 0;
  for (std::size_t i = usable.size(); i-- > 0;) {
    long ratio = (usable[i].order + usable[i].total - 1) / usable[i].total;
    suffix = std::max(suffix, ratio);
    usable[i].max_suffix_order_per_degree = suffix;
  }
  MultiPoly one = MultiPoly::constant(space->vars(), 1);
  span_monomials(tracker, basis, usable, 0, key.multidegree, key.order,
                 key.total_degree(), one, 0, min_factors, target);
}

}  // namespace

MinimizeResult minimize(const FormSpacePtr& space,
                        std::vector<EvaluatedCandidate> candidates,
                        std::optional<long> degree_bound) {
  // group nonzero candidates by slice
  std::map<SliceKey, std::vector<std::size_t>> slices;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto& c = candidates[i];
    if (c.cov.is_zero()) continue;
    SliceKey key{c.cov.multidegree(), c.cov.order()};
    if (degree_bound && key.total_degree() > *degree_bound) continue;
    slices[key].push_back(i);
  }

  MinimizeResult result;
  result.set = GeneratorSet(space);
  std::vector<AcceptedGen> accepted;

  for (auto& [key, idxs] : slices) {
    std::sort(idxs.begin(), idxs.end(), [&](std::size_t a, std::size_t b) {
      if (candidates[a].r != candidates[b].r)
        return candidates[a].r < candidates[b].r;
      return candidates[a].tie_break < candidates[b].tie_break;
    });
    SliceBasis basis(space, key);
    Int dim = basis.dimension();
    if (dim == 0) throw InternalError("nonzero candidate in a zero slice");
    std::size_t target = static_cast<std::size_t>(dim.get_ui());
    RankTracker tracker(basis.size());

    // span of products of previously accepted generators
    span_slice(tracker, basis, accepted, key, 2, target, space);

    for (auto i : idxs) {
      bool grew = tracker.add(basis.row_of(candidates[i].cov.source()));
      if (tracker.rank() > target)
        throw InternalError("slice rank exceeds its dimension");
      if (!grew) continue;
      result.set.add(candidates[i].cov, candidates[i].provenance);
      accepted.push_back(
          {candidates[i].cov.multidegree(), candidates[i].cov.order(),
           candidates[i].cov.total_degree(),
           candidates[i].cov.source().primitive_part()});
    }
    if (tracker.rank() < target)
      result.deficiencies.push_back({key, dim, tracker.rank()});
  }
  result.set.assign_names();
  return result;
}

namespace {

/// Evaluates kept candidates (in parallel) into minimize input.
std::vector<EvaluatedCandidate> evaluate_kept(
    const std::vector<CandidateTransvectant>& cands, const GeneratorSet& A,
    const GeneratorSet& B, const std::string& provenance) {
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < cands.size(); ++i)
    if (cands[i].kept()) kept.push_back(i);
  std::vector<EvaluatedCandidate> out(kept.size());
  parallel_for(kept.size(), [&](std::size_t k) {
    const auto& c = cands[kept[k]];
    Covariant cov = evaluate_candidate(c, A, B);
    std::string prov = c.unit_gen >= 0 ? "input basis" : provenance;
    out[k] = {std::move(cov), std::move(prov), c.r, c.recipe.str()};
  });
  return out;
}

}  // namespace

JointBasisResult joint_basis(const GeneratorSet& V1_basis,
                             const GeneratorSet& V2_basis,
                             const std::vector<Relation>& relations1,
                             const std::vector<Relation>& relations2,
                             bool enable_optional_pruners) {
  std::vector<int> orders = V1_basis.space()->orders();
  int s1 = static_cast<int>(orders.size());
  for (int n : V2_basis.space()->orders()) orders.push_back(n);
  auto joint = FormSpace::make(orders);
  std::vector<int> map1(s1), map2(orders.size() - s1);
  for (int s = 0; s < s1; ++s) map1[s] = s;
  for (std::size_t s = 0; s < map2.size(); ++s) map2[s] = s1 + static_cast<int>(s);
  GeneratorSet A = embed(V1_basis, joint, map1);
  GeneratorSet B = embed(V2_basis, joint, map2);

  CandidateFilters filters = CandidateFilters::from_relations(relations1, relations2);
  filters.order_bound = enable_optional_pruners;
  if (!enable_optional_pruners) {
    filters.lead_monomials_A.clear();
    filters.lead_monomials_B.clear();
    filters.invariant_ideal_A.clear();
    filters.invariant_ideal_B.clear();
  }
  auto cands = candidate_transvectants(A, B, filters);

  JointBasisResult result;
  for (const auto& c : cands) {
    if (c.unit_gen >= 0 && c.solution.empty()) continue;  // invariant pass-through
    ++result.candidates_before_filters;
    if (c.kept()) ++result.candidates_after_filters;
  }
  auto evaluated = evaluate_kept(cands, A, B, "joint transvectant");
  auto min = minimize(joint, std::move(evaluated));
  result.set = std::move(min.set);
  result.deficiencies = std::move(min.deficiencies);
  return result;
}

JointBasisResult adjoin_s2(const GeneratorSet& V_basis) {
  std::vector<int> orders = V_basis.space()->orders();
  int s1 = static_cast<int>(orders.size());
  orders.push_back(2);
  auto joint = FormSpace::make(orders);
  std::vector<int> map1(s1);
  for (int s = 0; s < s1; ++s) map1[s] = s;
  GeneratorSet H = embed(V_basis, joint, map1);
  Covariant u = *generic_form(joint, s1).cov;
  Covariant disc = transvectant(u, u, 2);

  std::vector<EvaluatedCandidate> cands;
  for (const auto& g : H.gens())
    cands.push_back({g.cov, "input basis", 0,
                     g.cov.recipe() ? g.cov.recipe()->str() : g.name});
  cands.push_back({u, "quadratic form", 0, u.recipe()->str()});
  cands.push_back({disc, "quadratic discriminant", 0, disc.recipe()->str()});

  struct Job {
    Covariant lhs;
    int p, r;
  };
  std::vector<Job> jobs;
  for (const auto& g : H.gens()) {
    int a = g.cov.order();
    for (int p = 1; 2 * p - 1 <= a; ++p) jobs.push_back({g.cov, p, 2 * p - 1});
    for (int p = 1; 2 * p <= a; ++p) jobs.push_back({g.cov, p, 2 * p});
  }
  // odd-order pairs, full contraction
  std::vector<const Generator*> odd;
  for (const auto& g : H.gens())
    if (g.cov.order() % 2 == 1) odd.push_back(&g);
  for (std::size_t i = 0; i < odd.size(); ++i)
    for (std::size_t j = i; j < odd.size(); ++j) {
      int p = (odd[i]->cov.order() + odd[j]->cov.order()) / 2;
      jobs.push_back({odd[i]->cov * odd[j]->cov, p, 2 * p});
    }

  std::vector<EvaluatedCandidate> extra(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t i) {
    const auto& job = jobs[i];
    Covariant up = u;
    for (int q = 1; q < job.p; ++q) up = up * u;
    Covariant t = transvectant(job.lhs, up, job.r);
    std::string tie = t.recipe() ? t.recipe()->str() : std::string{};
    extra[i] = {std::move(t), "quadratic adjunction", job.r, std::move(tie)};
  });
  for (auto& e : extra) cands.push_back(std::move(e));

  auto min = minimize(joint, std::move(cands));
  JointBasisResult result;
  result.set = std::move(min.set);
  result.deficiencies = std::move(min.deficiencies);
  result.candidates_before_filters = jobs.size() + H.size() + 2;
  result.candidates_after_filters = result.candidates_before_filters;
  return result;
}

namespace {

/// Drops family members exactly expressible by monomials in the remaining
/// ones; preserves relative completeness verbatim.
GeneratorSet reduce_family(const GeneratorSet& fam) {
  const auto& space = fam.space();
  std::vector<bool> dropped(fam.size(), false);
  // process from high degree down so cheap members stay
  std::vector<std::size_t> order(fam.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    long ta = fam.gens()[a].cov.total_degree(),
         tb = fam.gens()[b].cov.total_degree();
    if (ta != tb) return ta > tb;
    return a > b;
  });
  for (std::size_t oi : order) {
    const auto& g = fam.gens()[oi].cov;
    SliceKey key{g.multidegree(), g.order()};
    SliceBasis basis(space, key);
    RankTracker tracker(basis.size());
    std::vector<AcceptedGen> others;
    for (std::size_t j = 0; j < fam.size(); ++j) {
      if (j == oi || dropped[j]) continue;
      const auto& h = fam.gens()[j].cov;
      others.push_back({h.multidegree(), h.order(), h.total_degree(),
                        h.source().primitive_part()});
    }
    // single factors allowed: exact expressibility in the subalgebra
    span_slice(tracker, basis, others, key, 1, basis.size() + 1, space);
    if (tracker.in_span(basis.row_of(g.source()))) dropped[oi] = true;
  }
  GeneratorSet out(space);
  for (std::size_t i = 0; i < fam.size(); ++i)
    if (!dropped[i])
      out.add(fam.gens()[i].cov, fam.gens()[i].provenance, fam.gens()[i].name);
  return out;
}

}  // namespace

JointBasisResult simple_basis(int n, const std::map<int, GeneratorSet>& known_bases,
                              const SimpleBasisOptions& opts) {
  if (n <= 2) throw UsageError("simple algorithm needs n > 2");
  auto space = FormSpace::make({n});
  Covariant f = *generic_form(space, 0).cov;

  GeneratorSet family(space);  // running relatively complete family
  family.add(f, "input form", "f");

  std::size_t before = 0, after = 0;
  for (int k = 1; 2 * n - 4 * k > 0; ++k) {
    int p = 2 * n - 4 * k;
    Covariant H = transvectant(f, f, 2 * k);
    GeneratorSet B(space);
    bool b_is_known_basis = false;
    if (p > n) {
      B.add(H, "even transvectant");
    } else if (p == n) {
      B.add(H, "even transvectant");
      Covariant delta = triangle_invariant(f, n / 2);
      if (delta.is_zero()) {
        // excluded triangle; proceed with the transvectant alone
      } else {
        B.add(delta, "triangle invariant");
      }
    } else {
      auto it = known_bases.find(p);
      if (it == known_bases.end())
        throw UsageError("simple algorithm needs a covariant basis of order " +
                         std::to_string(p));
      for (const auto& g : it->second.gens()) {
        if (!g.cov.recipe())
          throw UsageError("known basis generators need recipes");
        Covariant inst = eval_recipe_with_base(*g.cov.recipe(), H);
        B.add(std::move(inst), "instantiated basis of order " + std::to_string(p));
      }
      b_is_known_basis = true;
    }
    B.assign_names();

    CandidateFilters filters;
    filters.order_bound = opts.enable_optional_pruners;
    if (b_is_known_basis && p == 4 && opts.enable_optional_pruners) {
      // quartic relation: the square of the order-6 covariant rewrites
      for (const auto& g : B.gens())
        if (g.cov.order() == 6 && g.cov.total_degree() == 3 * H.total_degree())
          filters.lead_monomials_B.push_back({{g.name, 2}});
    }
    auto cands = candidate_transvectants(family, B, filters);
    if (opts.grade_prune && !b_is_known_basis) {
      // heuristic cut behind the optional flag: transvectants of index
      // beyond 2k against H_{2k} families
      for (auto& c : cands)
        if (c.kept() && c.unit_gen < 0 && c.r > 2 * k)
          c.status = "pruned(grade)";
    }
    for (const auto& c : cands) {
      if (c.unit_gen >= 0 && c.solution.empty()) continue;
      ++before;
      if (c.kept()) ++after;
    }
    auto evaluated =
        evaluate_kept(cands, family, B, "simple step k=" + std::to_string(k));
    GeneratorSet next(space);
    for (auto& e : evaluated) {
      if (e.cov.is_zero()) continue;
      // drop exact duplicates up to scale
      bool dup = false;
      for (const auto& g : next.gens())
        if (g.cov.proportional_to(e.cov)) {
          dup = true;
          break;
        }
      if (!dup) next.add(std::move(e.cov), e.provenance);
    }
    next.assign_names();
    family = reduce_family(next);
  }
  if (n % 2 == 0) {
    Covariant top = transvectant(f, f, n);
    family.add(std::move(top), "final invariant");
  }
  family.assign_names();

  std::vector<EvaluatedCandidate> final_cands;
  for (const auto& g : family.gens())
    final_cands.push_back({g.cov, g.provenance, 0,
                           g.cov.recipe() ? g.cov.recipe()->str() : g.name});
  auto min = minimize(space, std::move(final_cands));
  JointBasisResult result;
  result.set = std::move(min.set);
  result.deficiencies = std::move(min.deficiencies);
  result.candidates_before_filters = before;
  result.candidates_after_filters = after;
  return result;
}

std::vector<Relation> find_relations(const GeneratorSet& G, const SliceKey& slice,
                                     const std::vector<std::string>& ranking) {
  const auto& space = G.space();
  // rank map: lower index = larger generator
  std::map<std::string, std::size_t> rank;
  if (!ranking.empty()) {
    for (std::size_t i = 0; i < ranking.size(); ++i) rank[ranking[i]] = i;
    for (const auto& g : G.gens())
      if (!rank.count(g.name))
        throw UsageError("ranking misses generator " + g.name);
  } else {
    for (std::size_t i = 0; i < G.size(); ++i) rank[G.gens()[i].name] = i;
  }

  // enumerate all monomials of the slice over G
  std::vector<GenMonomial> monomials;
  std::vector<MultiPoly> sources;
  std::function<void(std::size_t, std::vector<int>, int, long, GenMonomial,
                     MultiPoly)>
      rec = [&](std::size_t idx, std::vector<int> deg, int ord, long total,
                GenMonomial mono, MultiPoly partial) {
        if (total == 0) {
          if (ord == 0 && !mono.empty()) {
            monomials.push_back(std::move(mono));
            sources.push_back(std::move(partial));
          }
          return;
        }
        if (idx == G.size()) return;
        const auto& g = G.gens()[idx].cov;
        int emax = static_cast<int>(total / g.total_degree());
        for (std::size_t s = 0; s < deg.size() && emax > 0; ++s)
          if (g.multidegree()[s] > 0)
            emax = std::min(emax, deg[s] / g.multidegree()[s]);
        if (g.order() > 0) emax = std::min(emax, ord / g.order());
        MultiPoly cur = partial;
        auto d = deg;
        int o = ord;
        long t = total;
        for (int e = 0; e <= emax; ++e) {
          if (e > 0) {
            cur = cur * g.source();
            for (std::size_t s = 0; s < d.size(); ++s) d[s] -= g.multidegree()[s];
            o -= g.order();
            t -= g.total_degree();
          }
          GenMonomial m = mono;
          if (e > 0) m[static_cast<int>(idx)] = e;
          rec(idx + 1, d, o, t, std::move(m), cur);
        }
      };
  rec(0, slice.multidegree, slice.order, slice.total_degree(), {},
      MultiPoly::constant(space->vars(), 1));

  if (monomials.empty()) return {};
  SliceBasis basis(space, slice);
  std::map<Exp, std::size_t> row_index;
  for (std::size_t i = 0; i < basis.monomials().size(); ++i)
    row_index.emplace(basis.monomials()[i], i);
  ExactMatrix m(basis.size(), monomials.size());
  for (std::size_t c = 0; c < monomials.size(); ++c)
    for (const auto& t : sources[c].terms()) {
      auto it = row_index.find(t.exp);
      if (it == row_index.end())
        throw InternalError("monomial evaluation left the slice");
      m.set(it->second, c, t.coef);
    }
  auto kernel = m.kernel();

  // monomial comparison under the declared ranking (lex, largest first)
  auto named = [&](const GenMonomial& mono) {
    std::map<std::string, int> out;
    for (const auto& [i, e] : mono) out[G.gens()[i].name] = e;
    return out;
  };
  auto mono_less = [&](const GenMonomial& a, const GenMonomial& b) {
    std::vector<std::pair<std::size_t, int>> ea, eb;
    for (const auto& [i, e] : a) ea.emplace_back(rank.at(G.gens()[i].name), e);
    for (const auto& [i, e] : b) eb.emplace_back(rank.at(G.gens()[i].name), e);
    std::sort(ea.begin(), ea.end());
    std::sort(eb.begin(), eb.end());
    // larger = bigger exponent at the highest-ranked differing generator
    std::size_t ia = 0, ib = 0;
    while (ia < ea.size() && ib < eb.size()) {
      if (ea[ia].first != eb[ib].first) return ea[ia].first > eb[ib].first;
      if (ea[ia].second != eb[ib].second) return ea[ia].second < eb[ib].second;
      ++ia;
      ++ib;
    }
    return ia == ea.size() && ib != eb.size();
  };

  std::vector<Relation> out;
  for (const auto& v : kernel) {
    // leading monomial = largest with nonzero coefficient
    int lead_idx = -1;
    for (std::size_t c = 0; c < monomials.size(); ++c) {
      if (v[c] == 0) continue;
      if (lead_idx < 0 || mono_less(monomials[lead_idx], monomials[c]))
        lead_idx = static_cast<int>(c);
    }
    if (lead_idx < 0) continue;
    Relation rel;
    rel.lead = named(monomials[lead_idx]);
    Rat lc = v[lead_idx];
    for (std::size_t c = 0; c < monomials.size(); ++c) {
      if (static_cast<int>(c) == lead_idx || v[c] == 0) continue;
      rel.rhs.emplace_back(-v[c] / lc, named(monomials[c]));
    }
    // classify against the hypotheses' shapes
    auto lead_ranks = [&] {
      std::vector<std::pair<std::size_t, int>> lr;
      for (const auto& [name, e] : rel.lead) lr.emplace_back(rank.at(name), e);
      std::sort(lr.begin(), lr.end());
      return lr;
    }();
    bool lead_has_invariant = false;
    for (const auto& [name, e] : rel.lead) {
      (void)e;
      const Generator* g = G.find(name);
      if (g && g->cov.order() == 0) lead_has_invariant = true;
    }
    auto rhs_max_rank_ok = [&](std::size_t barrier, const std::string& self,
                               int self_max) {
      for (const auto& [c, mono] : rel.rhs) {
        (void)c;
        for (const auto& [name, e] : mono) {
          std::size_t rk = rank.at(name);
          if (name == self && e < self_max) continue;
          if (rk <= barrier) return false;
        }
      }
      return true;
    };
    if (lead_has_invariant) {
      rel.shape = Relation::Shape::InvariantMultiple;
    } else if (lead_ranks.size() == 1 &&
               rhs_max_rank_ok(lead_ranks[0].first,
                               rel.lead.begin()->first, lead_ranks[0].second)) {
      rel.shape = Relation::Shape::SinglePower;
    } else if (lead_ranks.size() == 2 &&
               rhs_max_rank_ok(lead_ranks[1].first, "", 0)) {
      rel.shape = Relation::Shape::TwoFactor;
    } else {
      rel.shape = Relation::Shape::General;
    }
    out.push_back(std::move(rel));
  }
  return out;
}

const GeneratorSet& builtin_basis(int n) {
  static std::map<int, GeneratorSet> cache;
  static std::recursive_mutex mu;
  std::lock_guard<std::recursive_mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  GeneratorSet basis;
  switch (n) {
    case 2:
      basis = cov_s2_basis();
      break;
    case 3:
      basis = simple_basis(3, {{2, builtin_basis(2)}}).set;
      break;
    case 4:
      basis = simple_basis(4, {}).set;
      break;
    case 5:
      basis = simple_basis(5, {{2, builtin_basis(2)}}).set;
      break;
    case 6:
      basis = simple_basis(6, {{4, builtin_basis(4)}}).set;
      break;
    case 8:
      basis = simple_basis(8, {{4, builtin_basis(4)}}).set;
      break;
    default:
      throw UsageError("no built-in basis for order " + std::to_string(n));
  }
  auto [pos, fresh] = cache.emplace(n, std::move(basis));
  (void)fresh;
  return pos->second;
}

bool VerifyReport::minimal() const {
  for (const auto& [name, needed] : generator_needed)
    if (!needed) return false;
  return true;
}

VerifyReport verify_generation(const GeneratorSet& G, long bound,
                               bool check_minimality) {
  VerifyReport report;
  report.bound = bound;
  const auto& space = G.space();

  std::vector<AcceptedGen> gens;
  for (const auto& g : G.gens())
    gens.push_back({g.cov.multidegree(), g.cov.order(), g.cov.total_degree(),
                    g.cov.source().primitive_part()});

  // group generators by slice for the minimality pass
  std::map<SliceKey, std::vector<std::size_t>> gens_by_slice;
  for (std::size_t i = 0; i < G.size(); ++i)
    gens_by_slice[{G.gens()[i].cov.multidegree(), G.gens()[i].cov.order()}]
        .push_back(i);

  std::vector<std::pair<std::string, bool>> needed(G.size());

  // enumerate slices by total degree
  std::function<void(std::vector<int>&, std::size_t, long)> per_degree =
      [&](std::vector<int>& deg, std::size_t idx, long rem) {
        if (idx + 1 == deg.size()) {
          deg[idx] = static_cast<int>(rem);
          long W = 0;
          for (std::size_t s = 0; s < deg.size(); ++s)
            W += static_cast<long>(space->order(static_cast<int>(s))) * deg[s];
          for (long k = W % 2; k <= W; k += 2) {
            SliceKey key{deg, static_cast<int>(k)};
            SliceBasis basis(space, key);
            Int dim = basis.dimension();
            if (dim == 0) continue;
            std::size_t target = static_cast<std::size_t>(dim.get_ui());
            RankTracker tracker(basis.size());
            span_slice(tracker, basis, gens, key, 1, target, space);
            if (tracker.rank() < target)
              report.deficiencies.push_back({key, dim, tracker.rank()});
            auto here = gens_by_slice.find(key);
            if (check_minimality && here != gens_by_slice.end()) {
              // products only, exhaustively; then leave-one-out
              RankTracker products(basis.size());
              span_slice(products, basis, gens, key, 2, basis.size() + 1, space);
              for (std::size_t gi : here->second) {
                RankTracker t2 = products.clone();
                for (std::size_t gj : here->second)
                  if (gj != gi)
                    t2.add(basis.row_of(G.gens()[gj].cov.source()));
                bool redundant =
                    t2.in_span(basis.row_of(G.gens()[gi].cov.source()));
                needed[gi] = {G.gens()[gi].name, !redundant};
              }
            }
          }
          return;
        }
        for (long d = 0; d <= rem; ++d) {
          deg[idx] = static_cast<int>(d);
          per_degree(deg, idx + 1, rem - d);
        }
      };
  for (long total = 0; total <= bound; ++total) {
    std::vector<int> deg(space->summands(), 0);
    per_degree(deg, 0, total);
  }
  if (check_minimality) {
    for (std::size_t i = 0; i < G.size(); ++i)
      if (needed[i].first.empty())
        needed[i] = {G.gens()[i].name,
                     G.gens()[i].cov.total_degree() > bound};  // out of range
    report.generator_needed = std::move(needed);
  }
  return report;
}

}  // namespace gordan
