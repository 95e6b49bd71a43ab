#pragma once

#include <cstdint>
#include <variant>

#include "expansive/boxeval.hpp"
#include "expansive/presentation.hpp"
#include "expansive/unipoly.hpp"

namespace expansive {

/// Replayable record of a unit-circle root count: the self-inversive part of
/// the input, its w = x + 1/x transform, and the Sturm count on (-2, 2).
struct SturmTranscript {
  UniPoly input;           // univariate polynomial that was counted
  UniPoly self_inversive;  // gcd(f, reciprocal f), +-1 factors removed
  UniPoly transform;       // h with self_inversive(x) = lc * x^k * h(x + 1/x)
  int roots_at_one = 0;
  int roots_at_minus_one = 0;
  int interior_count = 0;  // distinct roots of squarefree(h) in (-2, 2)
  int total = 0;           // claimed number of distinct unimodular roots
  std::string note;
};

/// Exhaustive dyadic subdivision of the angle torus where every leaf box is
/// excluded by some generator's enclosure.  Nodes are stored in preorder;
/// split_dim >= 0 marks an internal node (two children follow), split_dim ==
/// -1 a leaf excluded by generator `excluded_by`.
struct IntervalCover {
  std::vector<int> vars;
  struct Node {
    std::int16_t split_dim;
    std::int32_t excluded_by;
  };
  std::vector<Node> nodes;
};

/// Elimination certificate for two variables: per-generator eliminants
/// Res_y(f, f~) (f~ the reciprocal-conjugate), their gcd, and the Sturm
/// transcript showing the gcd has no unimodular root.
struct ResultantChain {
  int eliminated_var = 0;
  int base_var = 0;
  std::vector<UniPoly> eliminants;
  UniPoly common;  // gcd of the eliminants (and direct univariate constraints)
  SturmTranscript circle_count;
};

/// Certificates that need no computation to restate: the trivial module, a
/// nonzero constant generator, or an empty ambient set.
struct TrivialCert {
  enum Kind { TrivialModule, NonzeroConstant, EmptyAmbient } kind;
  int generator_index = -1;
};

using EmptinessCertificate = std::variant<TrivialCert, SturmTranscript, IntervalCover, ResultantChain>;

/// Re-establish the exclusion using exact-core primitives only.  Returns
/// false if any replayed step disagrees with the stored record.
bool replay_certificate(const EmptinessCertificate& cert, const IdealSpec& ideal);

const char* certificate_kind_name(const EmptinessCertificate& cert);

}  // namespace expansive
