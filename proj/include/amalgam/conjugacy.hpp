#pragma once

#include "amalgam/group_ring.hpp"

namespace amalgam {

enum class ClassKind {
  identity,
  central_torsion,   // a nontrivial power of r
  factor_torsion_s,  // conjugate into <s> but not into <r>
  factor_torsion_t,  // conjugate into <t> but not into <r>
  generic,           // everything else (infinite order)
};

struct ClassDescriptor {
  NormalWord representative;  // cyclically reduced
  ClassKind kind;
};

// Conjugates away matching first/last syllables until the word is
// cyclically reduced (first and last syllables in different factors, or
// at most one syllable). The central prefix rides along unchanged.
NormalWord cyclic_reduce(const NormalWord& a);

ClassDescriptor classify(const NormalWord& a);

// Conjugacy in G. Both factors are abelian and the amalgamated subgroup
// is central, so the general criterion collapses:
//   - central elements (syllable length 0) are conjugate iff equal;
//   - factor elements (cyclically reduced length 1) are conjugate iff
//     equal, since conjugation chains through abelian factors act
//     trivially;
//   - cyclically reduced words of length >= 2 are conjugate iff their
//     central powers agree and one syllable sequence is a cyclic rotation
//     of the other (conjugation by amalgam elements acts trivially).
// Throws ParamMismatch when the words live over different parameters.
bool are_conjugate(const NormalWord& a, const NormalWord& b);

enum class CyclicSubgroup { zd, zm, zn };

// |<g> ∩ Z_*|: how many elements of the chosen finite cyclic subgroup are
// conjugate to g, found by testing each one with are_conjugate.
int class_intersection_count(const NormalWord& g, CyclicSubgroup subgroup);

// Sum of the coefficients of a over support elements conjugate to g.
Rational delocalized_trace(const GroupRingElement& a, const NormalWord& g);

// Matrix extension: sum of the delocalized traces of the diagonal.
Rational delocalized_trace(const GRMatrix& a, const NormalWord& g);

}  // namespace amalgam
