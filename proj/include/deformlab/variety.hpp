#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "deformlab/deformation.hpp"
#include "deformlab/registry.hpp"

namespace deformlab {

struct RigidityReport {
  Index dim = 0;
  Index dim_z2 = 0, dim_b2 = 0, dim_h2 = 0, dim_h3 = 0;
  Index dim_der = 0;
  Index orbit_dim = 0;  // n^2 - dim_der
  bool algebraically_rigid = false;
  bool formally_rigid_via_h2 = false;    // the only YES this tool ever emits
  std::vector<bool> sq_coboundary;       // Sq status per H^2 representative
  std::vector<std::string> notes;
};

/// dim { D : D(xy) = D(x) y + x D(y) }, by exact nullspace of the Leibniz
/// constraints (the tangent space of Aut at the identity in characteristic 0).
Index derivation_dim(const Algebra& alg);

/// (dim Z^2, dim B^2): Zariski tangent space of the variety at the point and
/// tangent space of the GL-orbit.
std::pair<Index, Index> tangent_dims(const Algebra& alg);

RigidityReport rigidity_report(const Algebra& alg);

struct IdempotentSearch {
  std::vector<RatVector> idempotents;  // exactly verified, includes 0
  Index independent_count = 0;         // rank of the span of the findings
};

/// Finds idempotents by exact solving on basis rays and basis-pair planes,
/// plus floating-point Newton from random seeds followed by rational
/// reconstruction. Every returned vector satisfies mu(x, x) = x exactly;
/// completeness is not guaranteed.
IdempotentSearch idempotent_search(const Algebra& alg, std::uint64_t seed = 0, int newton_seeds = 32);

/// Order-by-order continuation of an idempotent of the base through a formal
/// deformation: returns X_0..X_order with mu_t(X_t, X_t) = X_t through the
/// requested order. Fails with SingularLinearization when the order-by-order
/// solve is not unique.
std::vector<RatVector> idempotent_continuation(const FormalDeformation& def, const RatVector& x0, int order);

struct CensusEntry {
  std::string id;
  Index dim = 0;
  Index dim_der = 0;
  Index dim_h2 = 0;
  Index idempotent_count = 0;  // linearly independent idempotents found
  bool associative = false;
  bool unital = false;
  bool rigid = false;
};

struct Census {
  std::vector<CensusEntry> entries;
  int component_count = 0;
  int rigid_count = 0;
  bool degeneration_verified = false;    // diag(1,t) carries a1 to a0 exactly
  std::string degeneration_witness;
  FormalDeformation nontrivial_deformation_of_a0;  // push-out witness
};

/// The dimension-2 census: the two classes a0 and a1 with their invariants,
/// the degeneration witness a1 -> a0, and the component/rigid counts.
Census census_dim2();

}  // namespace deformlab
