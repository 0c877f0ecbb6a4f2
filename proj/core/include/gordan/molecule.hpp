#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gordan {

/// Weighted colored digraph of atoms. Each atom is colored by a summand slot
/// and carries the valence of that summand; an edge of weight w stands for w
/// applications of the Cayley operator between its endpoints.
struct Molecule {
  struct Atom {
    std::string id;
    int color = 0;  // summand slot
    int valence = 0;
  };
  struct Edge {
    int origin = 0;
    int target = 0;
    int weight = 1;
  };

  std::vector<Atom> atoms;
  std::vector<Edge> edges;

  int atom_index(const std::string& id) const;
  /// valence minus the total weight of incident edges
  int free_valence(int atom) const;
  /// max edge weight; 0 for an edgeless molecule
  int grade() const;

  /// Even-weight edges carry no orientation: canonical form orders their
  /// endpoints (origin <= target). Odd edges keep their orientation.
  void canonicalize();

  /// Text format: one `atom id:order` line per atom (with an optional
  /// trailing slot for ambiguous colors) followed by `edge a b w` lines.
  std::string print() const;
  static Molecule parse(const std::string& text);
};

}  // namespace gordan
