#pragma once

// Cremona reduction of rational classes toward the fundamental domain of
// reduced classes.  One move sorts the E-coefficients descending; the other
// is the standard quadratic transformation centered on the three largest
// coefficients.

#include "capcone/hclass.hpp"

#include <string>
#include <vector>

namespace capcone {

struct CremonaMove {
  enum class Kind { Permute, Cremona };
  Kind kind = Kind::Cremona;
  // For Permute: new_coeffs[i] = old_coeffs[permutation[i]] (0-based).
  // Identity permutations are not recorded.
  std::vector<int> permutation;
};

std::string format_move(const CremonaMove& move);

struct CremonaReduction {
  PDClass cls;                    // terminal class
  std::vector<CremonaMove> word;  // replayable move sequence
};

// Repeatedly sorts the E-coefficients descending (stable, recording the
// permutation) and, while c1+c2+c3 > c0, applies
//   (c0,c1,c2,c3) -> (2c0-c1-c2-c3, c0-c2-c3, c0-c1-c3, c0-c1-c2).
// Stops as soon as the class is reduced or some coefficient is <= 0; the
// caller inspects the terminal class.  Each move strictly decreases c0
// within the discrete lattice (1/D)Z of the input's common denominator, so
// the loop terminates.  Idempotent on reduced classes.
// Requires c0 > 0 and n == 9.
CremonaReduction cremona_reduce(const PDClass& cls);

}  // namespace capcone
