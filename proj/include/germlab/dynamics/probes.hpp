#pragma once

#include "germlab/cantor/prefix_map.hpp"
#include "germlab/circle/thompson.hpp"
#include "germlab/dynamics/marked_group.hpp"

#include <vector>

namespace germlab::dynamics {

// ------------------------------------------------------------ circle

/// F marked by {a, b}; T by {a, b, c}.
MarkedGroup<circle::PLMap> group_F();
MarkedGroup<circle::PLMap> group_T();
/// F marked by {a, b, e} with e the copy of A supported in [1/16, 15/16].
/// The extra generator puts non-trivial [F,F] elements into small balls.
MarkedGroup<circle::PLMap> group_F_marked_e();

SubgroupSpec<circle::PLMap> support_inside_spec(const circle::Region& region);
/// Elements with trivial germ at every listed point.
SubgroupSpec<circle::PLMap> identity_germ_spec(const std::vector<Rational>& points);

/// g_n in F (n = 1..count) sending [a,b] onto [2^-(n+1), 1 - 2^-(n+1)],
/// built from dyadic bridges on [0,a], [a,b] and [b,1]. Requires
/// 0 < a < b < 1.
std::vector<circle::PLMap> expanding_net(const Dyadic& a, const Dyadic& b, int count);

/// Open sets separating a finite list of non-trivial elements.
struct DisjointOpenArcs {
  circle::Region U;  // open dyadic arcs, one per element
  circle::Arc W;     // open arc around z
  int depth = 0;     // dyadic level of the U's
};

/// Greedy search over dyadic arcs of increasing level for open U_i with
/// U_1..U_r, g_1(U_1)..g_r(U_r) pairwise disjoint and an open W around z
/// missing every U_i and g_j^-1(U_i). All checks use closures. Throws
/// PreconditionError for an identity element and SearchFailure past
/// max_depth.
DisjointOpenArcs disjoint_open_search(const std::vector<circle::PLMap>& P, const Rational& z, int max_depth = 16);
/// Exact re-check of every disjointness condition.
bool verify_disjoint_open(const std::vector<circle::PLMap>& P, const Rational& z, const DisjointOpenArcs& d);

struct MicroSupportCheck {
  bool identity_on_W = false;
  bool U_invariant = false;
  bool equals_on_U = false;
  bool all() const { return identity_on_W && U_invariant && equals_on_U; }
};

/// gamma, delta supported in the closure of the U's and leaving each U_i
/// invariant; throws PreconditionError otherwise. Returns a_{gamma,delta}
/// for the element g_l = P[l].
circle::PLMap micro_support_checked(const circle::PLMap& gamma, const circle::PLMap& delta,
                                    const std::vector<circle::PLMap>& P, const DisjointOpenArcs& d, std::size_t l);
MicroSupportCheck verify_micro_support(const circle::PLMap& a, const circle::PLMap& gamma, const circle::PLMap& delta,
                                       const circle::Arc& U_l, const circle::Arc& W);

// ------------------------------------------------------------ Cantor set

/// V marked by {a, b, c, p}.
MarkedGroup<cantor::PrefixMap> group_V();

SubgroupSpec<cantor::PrefixMap> support_inside_spec(const std::vector<cantor::Word>& cylinders);
SubgroupSpec<cantor::PrefixMap> identity_germ_spec(const std::vector<cantor::EventuallyPeriodic>& points);

/// g is the identity on C_c.
bool identity_on(const cantor::PrefixMap& g, const cantor::Word& c);
/// g(C_c) = C_c.
bool leaves_invariant(const cantor::PrefixMap& g, const cantor::Word& c);

struct DisjointOpenCylinders {
  std::vector<cantor::Word> U;
  cantor::Word W;
  int depth = 0;
};

/// Cylinder analogue of disjoint_open_search: U_i are cylinders of one
/// level, scanned in lexicographic order.
DisjointOpenCylinders disjoint_open_search(const std::vector<cantor::PrefixMap>& P, const cantor::EventuallyPeriodic& z,
                                           int max_depth = 12);
bool verify_disjoint_open(const std::vector<cantor::PrefixMap>& P, const cantor::EventuallyPeriodic& z,
                          const DisjointOpenCylinders& d);

cantor::PrefixMap micro_support_checked(const cantor::PrefixMap& gamma, const cantor::PrefixMap& delta,
                                        const std::vector<cantor::PrefixMap>& P, const DisjointOpenCylinders& d,
                                        std::size_t l);
MicroSupportCheck verify_micro_support(const cantor::PrefixMap& a, const cantor::PrefixMap& gamma,
                                       const cantor::PrefixMap& delta, const cantor::Word& U_l, const cantor::Word& W);

}  // namespace germlab::dynamics
