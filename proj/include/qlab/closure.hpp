#pragma once

#include <span>
#include <vector>

#include "qlab/finite_lattice.hpp"
#include "qlab/finite_module.hpp"

namespace qlab {

/// A map on the carrier given by its value table.
using MapTable = std::vector<Elem>;
/// rel[x][y] != 0 means x |- y.
using Relation = std::vector<std::vector<char>>;

/// Lattices larger than this are refused by the enumerations below.
inline constexpr int kClosureEnumerationBound = 8;

/// Extensive, monotone and idempotent.
bool is_closure_operator(const FiniteLattice& l, std::span<const Elem> gamma);
/// Subsets (sorted) closed under binary meets and containing top.
std::vector<std::vector<Elem>> meet_closed_subsets(const FiniteLattice& l);
/// Every closure operator, by backtracking over monotone extensive maps.
std::vector<MapTable> closure_operators(const FiniteLattice& l);

/// x -> meet{y in S | x <= y}.
MapTable closure_of_subset(const FiniteLattice& l, std::span<const Elem> s);
/// The image gamma[L], sorted.
std::vector<Elem> closure_image(std::span<const Elem> gamma);

struct ClosureCorrespondence {
  std::vector<std::vector<Elem>> subsets;  // meet-closed, in enumeration order
  std::vector<MapTable> operators;         // operators[i] = closure_of_subset(subsets[i])
  bool bijective = false;                  // both round trips are identities
  bool order_reversing = false;            // S <= T iff gamma_T <= gamma_S pointwise
};
/// SizeBound above kClosureEnumerationBound elements.
ClosureCorrespondence closure_meetclosed_bijection(const FiniteLattice& l);

/// Reflexive for >=, transitive, and x |- join{y | x |- y}.
LawReport check_consequence_relation(const FiniteLattice& l, const Relation& rel);
/// x |- y iff y <= gamma(x).
Relation consequence_of_closure(const FiniteLattice& l, std::span<const Elem> gamma);
/// gamma(x) = join{y | x |- y}. InvalidRelation if rel is not a consequence relation.
MapTable closure_of_consequence(const FiniteLattice& l, const Relation& rel);
/// Elements t with t |- x implying x <= t.
std::vector<Elem> theories(const FiniteLattice& l, const Relation& rel);

/// x |- y implies q*x |- q*y.
bool relation_structural(const FiniteModule& m, const Relation& rel);
/// q * gamma(x) <= gamma(q * x).
bool closure_structural(const FiniteModule& m, std::span<const Elem> gamma);

}  // namespace qlab
