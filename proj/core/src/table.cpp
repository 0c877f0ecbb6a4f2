#include "gordan/table.hpp"

#include <numeric>
#include <sstream>

namespace gordan {

std::string render_table(const GeneratorSet& g) {
  auto counts = g.counts();
  int max_deg = 0, max_ord = 0;
  int order_gcd = 0;
  for (const auto& [slice, n] : counts) {
    (void)n;
    max_deg = std::max(max_deg, slice.first);
    max_ord = std::max(max_ord, slice.second);
    order_gcd = std::gcd(order_gcd, slice.second);
  }
  int step = (order_gcd >= 2 && order_gcd % 2 == 0) ? 2 : 1;

  std::ostringstream os;
  os << "d/o:";
  for (int k = 0; k <= max_ord; k += step) os << " " << k;
  os << " | # | cum\n";
  if (counts.empty()) return os.str();

  std::vector<int> col_tot(max_ord / step + 1, 0);
  int cum = 0;
  for (int d = 1; d <= max_deg; ++d) {
    os << d << ":";
    int row = 0;
    for (int k = 0; k <= max_ord; k += step) {
      auto it = counts.find({d, k});
      int n = it == counts.end() ? 0 : it->second;
      if (n)
        os << " " << n;
      else
        os << " -";
      row += n;
      col_tot[k / step] += n;
    }
    cum += row;
    os << " | " << row << " | " << cum << "\n";
  }
  os << "tot:";
  for (int v : col_tot) os << " " << v;
  os << " | " << cum << "\n";
  return os.str();
}

}  // namespace gordan
