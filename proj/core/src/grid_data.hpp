#pragma once

namespace hrtfup::detail {

// One octahedral-symmetry orbit of a Lebedev rule. `code` selects the orbit
// generator (1..6), `w` is the common weight, `a`/`b` parametrize the orbit
// where applicable.
struct LebedevRule {
  int code;
  double w;
  double a;
  double b;
};

struct LebedevRuleSet {
  int order;        // nominal SH order N (precision 2N+1)
  int num_points;
  const LebedevRule* rules;
  int num_rules;
};

extern const LebedevRuleSet kLebedevRuleSets[];
extern const int kNumLebedevRuleSets;

// Frozen near-uniform interpolatory sets: rows of {azimuth_deg,
// elevation_deg, weight}, (N+1)^2 points at design order N.
struct FliegeSet {
  int order;
  int num_points;
  const double (*rows)[3];
};

extern const FliegeSet kFliegeSets[];
extern const int kNumFliegeSets;

}  // namespace hrtfup::detail
