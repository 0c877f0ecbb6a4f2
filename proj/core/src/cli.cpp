#include "gordan/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gordan/pipeline.hpp"
#include "gordan/reference.hpp"
#include "gordan/table.hpp"
#include "gordan/transvectant.hpp"

namespace gordan {

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

GeneratorSet load_basis(const std::string& spec) {
  if (spec.size() <= 2 && spec.find_first_not_of("0123456789") == std::string::npos)
    return builtin_basis(std::stoi(spec));
  std::ifstream in(spec);
  if (!in) throw UsageError("cannot read basis file: " + spec);
  std::stringstream ss;
  ss << in.rdbuf();
  return GeneratorSet::from_json(ss.str());
}

std::string run_stamp() {
  auto now = std::chrono::system_clock::now().time_since_epoch();
  auto us = std::chrono::duration_cast<std::chrono::microseconds>(now).count();
  return "run-" + std::to_string(us);
}

std::filesystem::path prepare_outdir(const std::string& base) {
  std::filesystem::path dir = base.empty()
                                  ? std::filesystem::path("runs") / run_stamp()
                                  : std::filesystem::path(base);
  std::filesystem::create_directories(dir);
  return dir;
}

void write_file(const std::filesystem::path& p, const std::string& content) {
  std::ofstream out(p);
  if (!out) throw UsageError("cannot write " + p.string());
  out << content;
}

struct Reporter {
  std::ostream& out;
  bool ok = true;
  void check(bool pass, const std::string& what) {
    out << (pass ? "PASS " : "FAIL ") << what << "\n";
    ok = ok && pass;
  }
};

/// The quartic generators v, (v,v)_2, ((v,v)_2,v)... in their classical
/// construction; used by the relation suites.
GeneratorSet classical_s4_gens() {
  auto space = FormSpace::make({4});
  auto v = generic_form(space, 0);
  Covariant k24 = transvectant(*v.cov, *v.cov, 2);
  Covariant k36 = transvectant(*v.cov, k24, 1);
  Covariant i = transvectant(*v.cov, *v.cov, 4);
  Covariant j = transvectant(*v.cov, k24, 4);
  GeneratorSet g(space);
  g.add(*v.cov, "form", "v");
  g.add(std::move(k24), "transvectant", "k24");
  g.add(std::move(k36), "transvectant", "k36");
  g.add(std::move(i), "invariant", "i");
  g.add(std::move(j), "invariant", "j");
  return g;
}

GeneratorSet classical_s6_partial_gens() {
  auto space = FormSpace::make({6});
  auto f = generic_form(space, 0);
  Covariant h20 = transvectant(*f.cov, *f.cov, 6);
  Covariant h24 = transvectant(*f.cov, *f.cov, 4);
  Covariant h28 = transvectant(*f.cov, *f.cov, 2);
  Covariant h36 = transvectant(h24, *f.cov, 2);
  Covariant h312 = transvectant(h28, *f.cov, 1);
  GeneratorSet g(space);
  g.add(*f.cov, "form", "f");
  g.add(std::move(h20), "invariant", "h2_0");
  g.add(std::move(h24), "transvectant", "h2_4");
  g.add(std::move(h28), "transvectant", "h2_8");
  g.add(std::move(h36), "transvectant", "h3_6");
  g.add(std::move(h312), "transvectant", "h3_12");
  return g;
}

bool counts_match(const GeneratorSet& set, const reference::CountTable& expect,
                  std::ostream& out) {
  auto got = set.counts();
  bool ok = true;
  for (const auto& [slice, n] : expect) {
    auto it = got.find(slice);
    int have = it == got.end() ? 0 : it->second;
    if (have != n) {
      out << "  slice (" << slice.first << "," << slice.second << "): got "
          << have << ", want " << n << "\n";
      ok = false;
    }
  }
  for (const auto& [slice, n] : got) {
    if (!expect.count(slice)) {
      out << "  unexpected slice (" << slice.first << "," << slice.second
          << "): " << n << "\n";
      ok = false;
    }
  }
  return ok;
}

int suite_simple(Reporter& rep, int n, std::size_t expect,
                 const reference::CountTable* table) {
  std::map<int, GeneratorSet> known;
  if (n == 3 || n == 5) known.emplace(2, builtin_basis(2));
  if (n == 6 || n == 8) known.emplace(4, builtin_basis(4));
  auto result = simple_basis(n, known);
  rep.check(result.deficiencies.empty(), "no deficient slice");
  rep.check(result.set.size() == expect,
            "basis size " + std::to_string(result.set.size()) + " == " +
                std::to_string(expect));
  if (table) rep.check(counts_match(result.set, *table, rep.out), "count table");
  return result.set.size() == expect ? 0 : 1;
}

void suite_s3s4(Reporter& rep, const std::filesystem::path& dir) {
  auto result = joint_basis(builtin_basis(3), builtin_basis(4));
  rep.check(result.candidates_before_filters == reference::cov_s3s4_candidates,
            "candidate count " +
                std::to_string(result.candidates_before_filters) + " == 104");
  rep.check(result.set.size() == 63, "63 generators");
  rep.check(counts_match(result.set, reference::cov_s3s4_table(), rep.out),
            "count table");
  rep.check(result.deficiencies.empty(), "no deficient slice");
  write_file(dir / "cov_s3s4.json", result.set.to_json());
  write_file(dir / "cov_s3s4.txt", render_table(result.set));
}

void suite_s6s2(Reporter& rep, const std::filesystem::path& dir) {
  auto result = adjoin_s2(builtin_basis(6));
  rep.check(result.set.size() == 99, "99 generators");
  rep.check(counts_match(result.set, reference::cov_s6s2_table(), rep.out),
            "count table");
  auto totals = result.set.order_totals();
  std::vector<int> expect{27, 30, 20, 13, 6, 2, 1};
  bool tot_ok = true;
  for (int k = 0; k <= 12; k += 2)
    tot_ok = tot_ok && totals[k] == expect[k / 2];
  rep.check(tot_ok, "order totals 27,30,20,13,6,2,1");
  auto verify = verify_generation(result.set, 15);
  rep.check(verify.all_full(), "generation verified to degree 15");
  rep.check(verify.minimal(), "no removable generator");
  write_file(dir / "cov_s6s2.json", result.set.to_json());
  write_file(dir / "cov_s6s2.txt", render_table(result.set));
}

void suite_dims(Reporter& rep) {
  bool table_ok = true;
  for (const auto& [deg, dim] : reference::inv844_degree12_dims()) {
    Int got = covariant_dimension({{8, 4, 4}, deg, 0});
    if (got != dim) {
      rep.out << "  (" << deg[0] << "," << deg[1] << "," << deg[2] << "): got "
              << got.get_str() << ", want " << dim << "\n";
      table_ok = false;
    }
  }
  rep.check(table_ok, "all 27 degree-12 slice dimensions");
  Int big = 0;
  for (int d1 = 0; d1 <= 49; ++d1)
    for (int d2 = 0; d2 + d1 <= 49; ++d2)
      big += covariant_dimension({{8, 4, 4}, {d1, d2, 49 - d1 - d2}, 0});
  rep.check(big == reference::inv844_degree49_count(),
            "degree-49 invariant count " + big.get_str());
}

void suite_series(Reporter& rep) {
  auto series = hilbert_series({4, 3}, SeriesGrading::TotalDegree, 18);
  const auto& expect = reference::cov_s4s3_series();
  bool ok = series.coefficients.size() == expect.size();
  for (std::size_t i = 0; ok && i < expect.size(); ++i)
    ok = series.coefficients[i] == expect[i];
  rep.check(ok, "Cov(S4+S3) series through degree 18");
}

void suite_relations(Reporter& rep) {
  {
    auto g = classical_s4_gens();
    auto rels = find_relations(g, {{6}, 12}, {"k36", "k24", "v", "i", "j"});
    bool ok = rels.size() == 1;
    if (ok) {
      // 12 k36^2 + 6 k24^3 + 2 j v^3 - 3 i v^2 k24 = 0
      const auto& r = rels[0];
      ok = r.lead == std::map<std::string, int>{{"k36", 2}};
      std::map<std::string, Rat> coef;
      for (const auto& [c, m] : r.rhs) {
        std::string key;
        for (const auto& [n, e] : m) key += n + "^" + std::to_string(e) + " ";
        coef[key] = c;
      }
      ok = ok && coef["k24^3 "] == Rat(-6, 12);
      ok = ok && coef["j^1 v^3 "] == Rat(-2, 12);
      ok = ok && coef["i^1 k24^1 v^2 "] == Rat(3, 12);
    }
    rep.check(ok, "quartic relation with coefficients (12,6,2,-3)");
    rep.check(!rels.empty() && rels[0].shape == Relation::Shape::SinglePower,
              "quartic relation has single-power shape");
  }
  {
    auto g = classical_s6_partial_gens();
    auto rels = find_relations(
        g, {{6}, 24}, {"h3_12", "h2_8", "h3_6", "f", "h2_4", "h2_0"});
    bool ok = rels.size() == 1;
    if (ok) {
      const auto& r = rels[0];
      ok = r.lead == std::map<std::string, int>{{"h3_12", 2}};
      std::map<std::string, Rat> coef;
      for (const auto& [c, m] : r.rhs) {
        std::string key;
        for (const auto& [n, e] : m) key += n + "^" + std::to_string(e) + " ";
        coef[key] = c;
      }
      // 36 h3_12^2 + h2_0 f^4 - 6 f^3 h3_6 - 9 h2_4 f^2 h2_8 + 18 h2_8^3 = 0
      ok = ok && coef["f^4 h2_0^1 "] == Rat(-1, 36);
      ok = ok && coef["f^3 h3_6^1 "] == Rat(6, 36);
      ok = ok && coef["f^2 h2_4^1 h2_8^1 "] == Rat(9, 36);
      ok = ok && coef["h2_8^3 "] == Rat(-18, 36);
    }
    rep.check(ok, "sextic leading-square relation (36,1,-6,-9,18)");
  }
}

void suite_s844_count(Reporter& rep) {
  DiophantineSystem reduced;
  reduced.row1 = reference::inv844_reduced_row1();
  reduced.row2 = reference::inv844_reduced_row2();
  reduced.invariants_only = true;
  auto basis = hilbert_basis(reduced);
  Int count = reduced_expand_count(basis.solutions, reference::inv844_mult1(),
                                   reference::inv844_mult2());
  rep.check(count == reference::inv844_solution_count,
            "expanded irreducible solutions " + count.get_str() + " == 695754");
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"exact covariant bases of binary forms"};
  app.require_subcommand(1);
  int thread_cap = 0;
  app.add_option("--threads", thread_cap, "worker cap for batch evaluation");

  // transvect
  auto* transvect = app.add_subcommand("transvect", "transvectant of generic forms");
  int tn = 0, tp = 0, tr = 0;
  bool expand = false;
  std::string normalization = "paper";
  transvect->add_option("--n", tn, "order of the first form")->required();
  transvect->add_option("--p", tp, "order of the second form")->required();
  transvect->add_option("--r", tr, "transvectant index")->required();
  transvect->add_flag("--expand", expand, "print the full polynomial");
  transvect->add_option("--normalization", normalization, "paper|gordan");

  // molecule
  auto* molecule_cmd = app.add_subcommand("molecule", "evaluate a molecule file");
  std::string molecule_file, molecule_spaces;
  bool mol_expand = false;
  molecule_cmd->add_option("--file", molecule_file, "molecule text file")->required();
  molecule_cmd->add_option("--spaces", molecule_spaces, "summand orders n1,n2,...")
      ->required();
  molecule_cmd->add_flag("--expand", mol_expand, "print the full polynomial");

  // dim
  auto* dim_cmd = app.add_subcommand("dim", "dimension of a covariant slice");
  std::string dim_spaces, dim_degree;
  int dim_order = 0;
  dim_cmd->add_option("--spaces", dim_spaces, "summand orders")->required();
  dim_cmd->add_option("--degree", dim_degree, "multidegree")->required();
  dim_cmd->add_option("--order", dim_order, "order")->required();

  // series
  auto* series_cmd = app.add_subcommand("series", "Hilbert series coefficients");
  std::string series_spaces, series_grading = "total";
  int series_bound = 0;
  bool series_inv = false;
  series_cmd->add_option("--spaces", series_spaces)->required();
  series_cmd->add_option("--grading", series_grading, "total|degree|multi");
  series_cmd->add_option("--bound", series_bound)->required();
  series_cmd->add_flag("--invariants", series_inv, "invariants only");

  // hilbert-basis
  auto* hb_cmd = app.add_subcommand("hilbert-basis", "irreducible solutions");
  std::string hb_system, hb_out;
  hb_cmd->add_option("--system", hb_system, "system JSON file")->required();
  hb_cmd->add_option("--out", hb_out, "output JSON path");

  // joint-basis
  auto* joint_cmd = app.add_subcommand("joint-basis", "Gordan's joint algorithm");
  std::string joint_left, joint_right, joint_outdir;
  bool joint_no_pruners = false;
  joint_cmd->add_option("--left", joint_left, "basis: order (2..6) or JSON file")
      ->required();
  joint_cmd->add_option("--right", joint_right, "basis: order or JSON file")
      ->required();
  joint_cmd->add_option("--outdir", joint_outdir, "artifact directory");
  joint_cmd->add_flag("--no-pruners", joint_no_pruners, "disable optional pruners");

  // adjoin-s2
  auto* adjoin_cmd = app.add_subcommand("adjoin-s2", "adjoin a quadratic form");
  std::string adjoin_base, adjoin_outdir;
  adjoin_cmd->add_option("--base", adjoin_base, "basis: order or JSON file")
      ->required();
  adjoin_cmd->add_option("--outdir", adjoin_outdir, "artifact directory");

  // simple-basis
  auto* simple_cmd = app.add_subcommand("simple-basis", "Gordan's simple algorithm");
  int simple_n = 0;
  bool simple_grade_prune = false;
  std::string simple_outdir;
  simple_cmd->add_option("--n", simple_n, "form order")->required();
  simple_cmd->add_flag("--grade-prune", simple_grade_prune,
                       "enable the optional grade pruner");
  simple_cmd->add_option("--outdir", simple_outdir, "artifact directory");

  // relations
  auto* rel_cmd = app.add_subcommand("relations", "kernel relations in a slice");
  std::string rel_base, rel_degree;
  int rel_order = 0;
  rel_cmd->add_option("--base", rel_base, "basis: order or JSON file")->required();
  rel_cmd->add_option("--degree", rel_degree, "multidegree")->required();
  rel_cmd->add_option("--order", rel_order, "order")->required();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "generation + minimality check");
  std::string verify_set;
  long verify_bound = -1;
  verify_cmd->add_option("--set", verify_set, "basis: order or JSON file")
      ->required();
  verify_cmd->add_option("--bound", verify_bound, "total degree bound");

  // repro
  auto* repro_cmd = app.add_subcommand("repro", "reproduction suites");
  std::string repro_suite, repro_outdir;
  repro_cmd
      ->add_option("--suite", repro_suite,
                   "s3|s4|s5|s6|s3s4|s6s2|dims|series|relations|s844-count")
      ->required();
  repro_cmd->add_option("--outdir", repro_outdir, "artifact directory");

  std::vector<std::string> argv(args);
  try {
    std::vector<const char*> cargs;
    cargs.push_back("gordan");
    for (const auto& a : argv) cargs.push_back(a.c_str());
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (thread_cap > 0) set_threads(thread_cap);

    if (*transvect) {
      if (tn == tp) {
        auto space = FormSpace::make({tn});
        auto f = generic_form(space, 0);
        auto t = transvectant(*f.cov, *f.cov, tr);
        if (t.is_zero()) {
          out << "0\n";
          return 0;
        }
        if (expand) {
          Rat scale = normalization_scale(normalization == "gordan"
                                              ? Normalization::Gordan
                                              : Normalization::Paper,
                                          tn, tp, tr);
          out << (t.value() * scale).str() << "\n";
        } else {
          out << t.recipe()->str() << "\n";
        }
        return 0;
      }
      auto space = FormSpace::make({tn, tp});
      auto f = generic_form(space, 0);
      auto g = generic_form(space, 1);
      auto t = transvectant(*f.cov, *g.cov, tr);
      if (t.is_zero()) {
        out << "0\n";
        return 0;
      }
      if (expand) {
        Rat scale = normalization_scale(
            normalization == "gordan" ? Normalization::Gordan
                                      : Normalization::Paper,
            tn, tp, tr);
        out << (t.value() * scale).str() << "\n";
      } else {
        out << t.recipe()->str() << "\n";
      }
      return 0;
    }

    if (*molecule_cmd) {
      std::ifstream in(molecule_file);
      if (!in) throw UsageError("cannot read molecule file: " + molecule_file);
      std::stringstream ss;
      ss << in.rdbuf();
      Molecule m = Molecule::parse(ss.str());
      auto orders = parse_int_list(molecule_spaces);
      auto space = FormSpace::make(orders);
      std::vector<BinaryForm> forms;
      for (const auto& atom : m.atoms) {
        int slot = atom.color;
        if (slot == 0 && space->summands() > 1) {
          // resolve by unique order when unambiguous
          int found = -1;
          for (int s = 0; s < space->summands(); ++s)
            if (space->order(s) == atom.valence)
              found = found < 0 ? s : -2;
          if (found >= 0) slot = found;
        }
        forms.push_back(generic_form(space, slot));
      }
      Covariant c = evaluate_molecule(m, forms);
      if (c.is_zero())
        out << "0\n";
      else if (mol_expand)
        out << c.value().str() << "\n";
      else
        out << "order " << c.order() << ", degree " << c.total_degree() << "\n";
      return 0;
    }

    if (*dim_cmd) {
      DimQuery q{parse_int_list(dim_spaces), parse_int_list(dim_degree), dim_order};
      out << covariant_dimension(q).get_str() << "\n";
      return 0;
    }

    if (*series_cmd) {
      SeriesGrading grading = SeriesGrading::TotalDegree;
      if (series_grading == "degree") grading = SeriesGrading::Degree;
      else if (series_grading == "multi") grading = SeriesGrading::Multigraded;
      else if (series_grading != "total")
        throw UsageError("unknown grading: " + series_grading);
      auto series = hilbert_series(parse_int_list(series_spaces), grading,
                                   series_bound, series_inv);
      if (grading == SeriesGrading::Multigraded) {
        out << series.to_json() << "\n";
      } else {
        for (std::size_t i = 0; i < series.coefficients.size(); ++i)
          out << (i ? "," : "") << series.coefficients[i].get_str();
        out << "\n";
      }
      return 0;
    }

    if (*hb_cmd) {
      std::ifstream in(hb_system);
      if (!in) throw UsageError("cannot read system file: " + hb_system);
      std::stringstream ss;
      ss << in.rdbuf();
      auto sys = DiophantineSystem::from_json(ss.str());
      auto basis = hilbert_basis(sys);
      out << basis.solutions.size() << " irreducible solutions\n";
      if (!hb_out.empty())
        write_file(hb_out, basis.to_json());
      else
        out << basis.to_json() << "\n";
      return 0;
    }

    if (*joint_cmd) {
      auto dir = prepare_outdir(joint_outdir);
      auto left = load_basis(joint_left);
      auto right = load_basis(joint_right);
      auto result = joint_basis(left, right, {}, {}, !joint_no_pruners);
      out << result.candidates_before_filters << " candidates, "
          << result.set.size() << " generators\n";
      out << render_table(result.set);
      write_file(dir / "basis.json", result.set.to_json());
      write_file(dir / "table.txt", render_table(result.set));
      return result.deficiencies.empty() ? 0 : 1;
    }

    if (*adjoin_cmd) {
      auto dir = prepare_outdir(adjoin_outdir);
      auto base = load_basis(adjoin_base);
      auto result = adjoin_s2(base);
      out << result.set.size() << " generators\n";
      out << render_table(result.set);
      write_file(dir / "basis.json", result.set.to_json());
      write_file(dir / "table.txt", render_table(result.set));
      return result.deficiencies.empty() ? 0 : 1;
    }

    if (*simple_cmd) {
      auto dir = prepare_outdir(simple_outdir);
      // supply every smaller order reachable as 2n-4k
      std::map<int, GeneratorSet> known;
      for (int k = 1; 2 * simple_n - 4 * k > 0; ++k) {
        int p = 2 * simple_n - 4 * k;
        if (p < simple_n && p >= 2) known.emplace(p, builtin_basis(p));
      }
      SimpleBasisOptions opts;
      opts.grade_prune = simple_grade_prune;
      auto result = simple_basis(simple_n, known, opts);
      out << result.set.size() << " generators\n";
      out << render_table(result.set);
      write_file(dir / "basis.json", result.set.to_json());
      write_file(dir / "table.txt", render_table(result.set));
      return result.deficiencies.empty() ? 0 : 1;
    }

    if (*rel_cmd) {
      auto base = load_basis(rel_base);
      SliceKey key{parse_int_list(rel_degree), rel_order};
      auto rels = find_relations(base, key);
      for (const auto& r : rels) out << r.str() << "\n";
      if (rels.empty()) out << "no relations\n";
      return 0;
    }

    if (*verify_cmd) {
      auto set = load_basis(verify_set);
      long bound = verify_bound;
      if (bound < 0) {
        for (const auto& g : set.gens())
          bound = std::max(bound, g.cov.total_degree());
        bound += 2;
      }
      auto report = verify_generation(set, bound);
      for (const auto& d : report.deficiencies) {
        out << "deficient slice (";
        for (std::size_t i = 0; i < d.slice.multidegree.size(); ++i)
          out << (i ? "," : "") << d.slice.multidegree[i];
        out << ";" << d.slice.order << "): " << d.achieved << " < "
            << d.expected.get_str() << "\n";
      }
      for (const auto& [name, needed] : report.generator_needed)
        if (!needed) out << "removable generator: " << name << "\n";
      out << (report.all_full() ? "generation verified" : "generation FAILED")
          << " up to degree " << bound << "\n";
      return report.all_full() && report.minimal() ? 0 : 1;
    }

    if (*repro_cmd) {
      auto dir = prepare_outdir(repro_outdir);
      Reporter rep{out};
      if (repro_suite == "s3")
        suite_simple(rep, 3, 4, nullptr);
      else if (repro_suite == "s4")
        suite_simple(rep, 4, 5, nullptr);
      else if (repro_suite == "s5")
        suite_simple(rep, 5, reference::cov_s5_size, nullptr);
      else if (repro_suite == "s6")
        suite_simple(rep, 6, 26, &reference::cov_s6_table());
      else if (repro_suite == "s3s4")
        suite_s3s4(rep, dir);
      else if (repro_suite == "s6s2")
        suite_s6s2(rep, dir);
      else if (repro_suite == "dims")
        suite_dims(rep);
      else if (repro_suite == "series")
        suite_series(rep);
      else if (repro_suite == "relations")
        suite_relations(rep);
      else if (repro_suite == "s844-count")
        suite_s844_count(rep);
      else
        throw UsageError("unknown suite: " + repro_suite);
      return rep.ok ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace gordan
