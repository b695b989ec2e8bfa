#pragma once

#include <string>

#include "detcycle/arith/ring_elem.hpp"

namespace detcycle::localcoh {

using arith::RingElem;
using arith::RingPtr;

// Representative numerator / f^n of a class in the local cohomology of
// O (x) m_A along the divisor f = 0. Stored unreduced; equality goes through
// f-adic valuations, which requires f irreducible (not checked).
class H1yClassRep {
 public:
  // Throws InvalidInput unless f is pure and non-constant, n >= 1 and the
  // numerator has zero augmentation.
  H1yClassRep(RingElem f, unsigned n, RingElem numerator);

  static H1yClassRep zero(const RingElem& f) { return H1yClassRep(f, 1, RingElem(f.context())); }

  const RingElem& f() const noexcept { return f_; }
  unsigned level() const noexcept { return n_; }
  const RingElem& numerator() const noexcept { return num_; }
  const RingPtr& context() const noexcept { return f_.context(); }

  // numerator*f / f^(n+1): the image under the colimit transition map.
  H1yClassRep raised() const;

  // "(e*y) / x^1"
  std::string to_string() const;

 private:
  RingElem f_;
  unsigned n_;
  RingElem num_;
};

// Class numerator in Ext^2(O/(f1, f2), O (x) m_A) ~ (O (x) m_A)/(f1, f2).
class Ext2ClassRep {
 public:
  // Throws InvalidInput if f1 or f2 is zero or impure, or f2 lies in (f1).
  Ext2ClassRep(RingElem f1, RingElem f2, RingElem numerator);

  const RingElem& f1() const noexcept { return f1_; }
  const RingElem& f2() const noexcept { return f2_; }
  const RingElem& numerator() const noexcept { return num_; }

  // "gamma[x,y] = e*y^2"
  std::string to_string() const;

 private:
  RingElem f1_;
  RingElem f2_;
  RingElem num_;
};

// Throws InvalidInput when the local equations differ.
bool h1y_equal(const H1yClassRep& a, const H1yClassRep& b);
bool h1y_is_zero(const H1yClassRep& a);

// Class sum over the common level a.n + b.n.
H1yClassRep h1y_add(const H1yClassRep& a, const H1yClassRep& b);
H1yClassRep h1y_scale(const H1yClassRep& a, const RingElem& c);

bool ext2_is_zero(const Ext2ClassRep& c);

// Component of the Gersten boundary at the point cut out by (a.f, f2).
// Only level-1 representatives are supported.
Ext2ClassRep boundary_to_ext2(const H1yClassRep& a, const RingElem& f2);

}  // namespace detcycle::localcoh
