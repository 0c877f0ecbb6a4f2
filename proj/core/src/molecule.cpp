#include "gordan/molecule.hpp"

#include <algorithm>
#include <sstream>

#include "gordan/rational.hpp"

namespace gordan {

int Molecule::atom_index(const std::string& id) const {
  for (std::size_t i = 0; i < atoms.size(); ++i)
    if (atoms[i].id == id) return static_cast<int>(i);
  throw UsageError("unknown atom id: " + id);
}

int Molecule::free_valence(int atom) const {
  if (atom < 0 || atom >= static_cast<int>(atoms.size()))
    throw UsageError("atom index out of range");
  int v = atoms[atom].valence;
  for (const auto& e : edges)
    if (e.origin == atom || e.target == atom) v -= e.weight;
  return v;
}

int Molecule::grade() const {
  int g = 0;
  for (const auto& e : edges) g = std::max(g, e.weight);
  return g;
}

void Molecule::canonicalize() {
  for (auto& e : edges) {
    if (e.origin == e.target) throw UsageError("edge endpoints must be distinct");
    if (e.weight % 2 == 0 && e.origin > e.target) std::swap(e.origin, e.target);
  }
  std::stable_sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.origin, a.target, a.weight) <
           std::tie(b.origin, b.target, b.weight);
  });
}

std::string Molecule::print() const {
  std::ostringstream os;
  for (const auto& a : atoms) {
    os << "atom " << a.id << ":" << a.valence;
    if (a.color != 0) os << " " << a.color;
    os << "\n";
  }
  for (const auto& e : edges)
    os << "edge " << atoms[e.origin].id << " " << atoms[e.target].id << " "
       << e.weight << "\n";
  return os.str();
}

Molecule Molecule::parse(const std::string& text) {
  Molecule m;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "atom") {
      std::string spec;
      if (!(ls >> spec)) throw UsageError("atom line needs id:order");
      auto colon = spec.find(':');
      if (colon == std::string::npos) throw UsageError("atom line needs id:order");
      Atom a;
      a.id = spec.substr(0, colon);
      a.valence = std::stoi(spec.substr(colon + 1));
      int color = 0;
      if (ls >> color) a.color = color;
      m.atoms.push_back(std::move(a));
    } else if (kw == "edge") {
      std::string a, b;
      int w;
      if (!(ls >> a >> b >> w)) throw UsageError("edge line needs: edge a b w");
      if (w < 1) throw UsageError("edge weight must be >= 1");
      m.edges.push_back({m.atom_index(a), m.atom_index(b), w});
    } else if (kw[0] == '#') {
      continue;
    } else {
      throw UsageError("unknown molecule line: " + line);
    }
  }
  m.canonicalize();
  return m;
}

}  // namespace gordan
