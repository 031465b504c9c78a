// Membership tests for the classes H1 (semigroups isomorphic to the closure
// of some P x P) and HS (isomorphic to the closure of some symmetrised
// product with at least two blocks), their identity-adjoined versions, and
// the canonical relation models of members.

#ifndef RELSEMI_CLASSIFY_HPP_
#define RELSEMI_CLASSIFY_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "relsemi/generation.hpp"
#include "relsemi/partition.hpp"
#include "relsemi/semigroup.hpp"

namespace relsemi {

  enum class ConditionStatus { pass, fail, skipped };

  std::string_view to_string(ConditionStatus s) noexcept;

  struct ConditionReport {
    std::string              name;  // "ii1", ..., or "band" for the decomposition
    ConditionStatus          status = ConditionStatus::pass;
    // Element indices of the lexicographically first violating tuple.
    std::vector<std::size_t> witness;
    std::string              note;
  };

  // A closure of some product partition together with an isomorphism from
  // the classified semigroup onto it.
  struct CanonicalModel {
    Partition                p;
    ProductKind              kind;
    GeneratedSemigroup       closure;
    std::vector<std::size_t> iso;  // element of h -> element of closure
  };

  struct ClassVerdict {
    bool                         member = false;
    std::vector<ConditionReport> conditions;
    std::optional<CanonicalModel> model;
    std::string                  note;

    ConditionReport const* condition(std::string_view name) const;
  };

  // Conditions ii1..ii4: a zero when |H| >= 2; distinct idempotents
  // multiply to the zero; for every pair of nontrivial idempotents (l, r)
  // exactly one nonzero a with a = l * a * r; for every nonzero a exactly
  // one such pair. A member's verdict carries its canonical model.
  ClassVerdict check_H1(AbstractSemigroup const& h);

  // Ground set = nontrivial idempotents in index order (a single point when
  // |H| = 1), singleton blocks, plain product. Throws PreconditionError when
  // h is not in H1.
  CanonicalModel canonical_H1_model(AbstractSemigroup const& h);

  struct BandDecomposition {
    std::vector<std::size_t>              core;    // ascending
    std::vector<std::vector<std::size_t>> groups;  // {g, g^2}, by g
  };

  // Candidate groups are {g, g^2} for every non-idempotent g with g^3 = g
  // and g^2 idempotent; the core is the rest. Returns the decomposition
  // only when the core is a nonempty ideal, the candidates are disjoint
  // subsemigroups and products across different groups land in the core.
  std::optional<BandDecomposition> decompose_band_with_core(AbstractSemigroup const& h);

  // The decomposition (reported as condition "band") followed by ii1..ii5.
  ClassVerdict check_HS(AbstractSemigroup const& h);

  // Ground set = nontrivial idempotents of the core, singleton blocks,
  // symmetrised product. Throws PreconditionError when h is not in HS.
  CanonicalModel canonical_HS_model(AbstractSemigroup const& h);

  // Member iff h is isomorphic to g with an identity adjoined for some g in
  // the class. A group of order 2 is never an HS-unit member; its verdict
  // notes it as the two-block degenerate case.
  ClassVerdict check_H1_unit(AbstractSemigroup const& h);
  ClassVerdict check_HS_unit(AbstractSemigroup const& h);

  // "(a, b)" with element names.
  std::string format_witness(AbstractSemigroup const&        h,
                             std::vector<std::size_t> const& witness);

}  // namespace relsemi

#endif  // RELSEMI_CLASSIFY_HPP_
