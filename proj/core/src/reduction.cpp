#include "capcone/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace capcone {

std::string format_move(const CremonaMove& move) {
  if (move.kind == CremonaMove::Kind::Cremona) return "cremona";
  std::ostringstream os;
  os << "permute(";
  for (std::size_t i = 0; i < move.permutation.size(); ++i) {
    os << (i ? "," : "") << move.permutation[i];
  }
  os << ')';
  return os.str();
}

CremonaReduction cremona_reduce(const PDClass& input) {
  if (input.n != 9) throw math_error("cremona_reduce: requires n == 9");
  if (input.c0 <= 0) {
    throw math_error("cremona_reduce: c0 = " + format_rational(input.c0) +
                     " is not positive");
  }

  CremonaReduction out;
  out.cls = input;
  PDClass& v = out.cls;

  // c0 decreases by at least 1/D per Cremona move, D the common denominator
  // of the input, so this bound is never reached on legal inputs.
  for (int iter = 0; iter < 1'000'000; ++iter) {
    // stable descending sort of the E-coefficients
    std::vector<int> perm(9);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](int x, int y) { return v.c[x] > v.c[y]; });
    bool identity = true;
    for (int i = 0; i < 9; ++i) identity = identity && perm[i] == i;
    if (!identity) {
      std::vector<Rat> sorted(9);
      for (int i = 0; i < 9; ++i) sorted[i] = v.c[perm[i]];
      v.c = std::move(sorted);
      out.word.push_back({CremonaMove::Kind::Permute, perm});
    }

    if (v.c0 <= 0 || v.c[8] <= 0) break;             // left the positive region
    if (v.c[0] + v.c[1] + v.c[2] <= v.c0) break;      // reduced

    const Rat c0 = v.c0, c1 = v.c[0], c2 = v.c[1], c3 = v.c[2];
    v.c0 = 2 * c0 - c1 - c2 - c3;
    v.c[0] = c0 - c2 - c3;
    v.c[1] = c0 - c1 - c3;
    v.c[2] = c0 - c1 - c2;
    out.word.push_back({CremonaMove::Kind::Cremona, {}});
  }
  return out;
}

}  // namespace capcone
