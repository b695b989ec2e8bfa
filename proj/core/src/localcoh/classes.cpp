#include "detcycle/localcoh/classes.hpp"

#include "detcycle/arith/groebner.hpp"
#include "detcycle/errors.hpp"

namespace detcycle::localcoh {

namespace {

using arith::divide_exact;

void require_equation(const RingElem& f, const char* what) {
  if (f.is_zero()) throw InvalidInput(std::string(what) + " must be nonzero");
  if (!f.is_pure()) throw InvalidInput(std::string(what) + " " + f.to_string() + " carries artinian terms");
}

// f^m divides every e-coefficient of p.
bool divisible_by_power(const RingElem& p, const RingElem& f, unsigned m) {
  if (p.is_zero() || m == 0) return true;
  return divide_exact(p, f.pow(m)).has_value();
}

std::string wrapped(const RingElem& p) { return "(" + p.to_string() + ")"; }

}  // namespace

H1yClassRep::H1yClassRep(RingElem f, unsigned n, RingElem numerator)
    : f_(std::move(f)), n_(n), num_(std::move(numerator)) {
  require_equation(f_, "local equation");
  if (f_.var_degree() == 0) throw InvalidInput("local equation must be non-constant");
  if (n_ == 0) throw InvalidInput("class level must be >= 1");
  arith::require_same(num_.context(), f_.context());
  if (!arith::augment(num_).is_zero()) {
    throw InvalidInput("class numerator " + num_.to_string() + " has nonzero augmentation");
  }
}

H1yClassRep H1yClassRep::raised() const { return H1yClassRep(f_, n_ + 1, num_ * f_); }

std::string H1yClassRep::to_string() const {
  return wrapped(num_) + " / " + f_.to_string() + "^" + std::to_string(n_);
}

Ext2ClassRep::Ext2ClassRep(RingElem f1, RingElem f2, RingElem numerator)
    : f1_(std::move(f1)), f2_(std::move(f2)), num_(std::move(numerator)) {
  require_equation(f1_, "first parameter");
  require_equation(f2_, "second parameter");
  arith::require_same(f1_.context(), f2_.context());
  arith::require_same(num_.context(), f1_.context());
  if (divide_exact(f2_, f1_).has_value()) {
    throw InvalidInput(f2_.to_string() + " lies in (" + f1_.to_string() + "); not a parameter pair");
  }
}

std::string Ext2ClassRep::to_string() const {
  return "gamma[" + f1_.to_string() + "," + f2_.to_string() + "] = " + num_.to_string();
}

bool h1y_equal(const H1yClassRep& a, const H1yClassRep& b) {
  if (!(a.f() == b.f())) {
    throw InvalidInput("classes along different local equations: " + a.f().to_string() + " vs " +
                       b.f().to_string());
  }
  const RingElem& f = a.f();
  RingElem diff = a.numerator() * f.pow(b.level()) - b.numerator() * f.pow(a.level());
  return divisible_by_power(diff, f, a.level() + b.level());
}

bool h1y_is_zero(const H1yClassRep& a) { return divisible_by_power(a.numerator(), a.f(), a.level()); }

H1yClassRep h1y_add(const H1yClassRep& a, const H1yClassRep& b) {
  if (!(a.f() == b.f())) throw InvalidInput("cannot add classes along different local equations");
  const RingElem& f = a.f();
  return H1yClassRep(f, a.level() + b.level(),
                     a.numerator() * f.pow(b.level()) + b.numerator() * f.pow(a.level()));
}

H1yClassRep h1y_scale(const H1yClassRep& a, const RingElem& c) {
  return H1yClassRep(a.f(), a.level(), arith::rho_split(c * a.numerator()));
}

bool ext2_is_zero(const Ext2ClassRep& c) {
  if (c.numerator().is_zero()) return true;
  return arith::ideal_membership(c.numerator(), {c.f1(), c.f2()});
}

Ext2ClassRep boundary_to_ext2(const H1yClassRep& a, const RingElem& f2) {
  if (a.level() != 1) {
    throw InvalidInput("boundary is only defined on level-1 representatives, got level " +
                       std::to_string(a.level()));
  }
  return Ext2ClassRep(a.f(), f2, f2 * a.numerator());
}

}  // namespace detcycle::localcoh
