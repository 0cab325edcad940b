#pragma once

// Finite p-modules M(lambda) = sum_i Z/p^{lambda_i}, represented in
// coordinates with respect to the standard cyclic generators e_i. All
// arithmetic is exact: coordinate i lives in [0, p^{lambda_i}).

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "lrembed/arith.hpp"
#include "lrembed/partition.hpp"

namespace lrembed {

bool is_prime(Int n);

struct Element {
  std::vector<Int> coords;

  auto operator<=>(const Element&) const = default;
};

std::string to_string(const Element& x);

class PModule {
 public:
  PModule() = default;
  /// Throws Error(not_prime) for composite p, Error(out_of_range) if p^{lambda_1} is too large.
  PModule(Int p, Partition lambda);

  Int p() const { return p_; }
  const Partition& lambda() const { return lambda_; }
  std::size_t rank() const { return lambda_.length(); }
  int exponent(std::size_t i) const { return lambda_[i]; }
  Int modulus(std::size_t i) const { return moduli_[i]; }
  /// lambda_1: every element is killed by p^precision.
  int precision() const { return lambda_.largest(); }
  /// log_p of the order.
  int log_order() const { return lambda_.weight(); }

  Element zero() const { return Element{std::vector<Int>(rank(), 0)}; }
  Element basis(std::size_t i) const;

  Element reduce(std::vector<Int> coords) const;
  bool in_range(const Element& x) const;
  bool is_zero(const Element& x) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element scale(const Element& a, Int c) const;
  /// p^k * a
  Element p_multiple(const Element& a, int k) const;

  /// log_p of the order of x.
  int order_exponent(const Element& x) const;

  bool operator==(const PModule& other) const { return p_ == other.p_ && lambda_ == other.lambda_; }

 private:
  Int p_ = 2;
  Partition lambda_;
  std::vector<Int> moduli_;
};

class Submodule {
 public:
  Submodule() = default;
  /// Throws Error(out_of_range) for generators of the wrong length or with
  /// unreduced coordinates.
  Submodule(PModule ambient, std::vector<Element> generators);

  static Submodule zero(const PModule& ambient) { return Submodule(ambient, {}); }
  static Submodule whole(const PModule& ambient);

  const PModule& ambient() const { return ambient_; }
  const std::vector<Element>& generators() const { return gens_; }

 private:
  PModule ambient_;
  std::vector<Element> gens_;
};

/// Exponent type of ambient / W, read off a Smith normal form of the relations.
Partition quotient_type(const Submodule& w);

/// Submodule generated by p^h g for the generators g.
Submodule p_power(const Submodule& a, int h);

/// Least r with p^r A = 0.
int exponent(const Submodule& a);

/// log_p |W|.
int log_order(const Submodule& w);

/// Isomorphism type of W as an abstract module.
Partition module_type(const Submodule& w);

bool contains(const Submodule& w, const Element& x);
bool contains(const Submodule& outer, const Submodule& inner);
bool same_submodule(const Submodule& a, const Submodule& b);
Submodule sum(const Submodule& a, const Submodule& b);

/// Drops generators already in the span of the ones kept before them.
Submodule minimized(const Submodule& w);

/// B/W presented as a module of sorted type, with coordinate maps in both directions.
struct QuotientPresentation {
  Submodule kernel;
  PModule quotient;
  /// rank(B) x rank(B/W): row i holds the image of e_i.
  Matrix projection;
  /// rank(B/W) x rank(B): row k holds a representative of the k-th generator.
  Matrix lift;

  Element project(const Element& x) const;
  Element lift_element(const Element& y) const;
  /// Image in the quotient of a submodule of B.
  Submodule image(const Submodule& s) const;
  /// Full preimage in B of a submodule of the quotient.
  Submodule preimage(const Submodule& s) const;
};

QuotientPresentation quotient_presentation(const Submodule& w);

/// A basis b_0..b_{n-1} of B obtained from the standard one by automorphisms,
/// with ord(b_i) = p^{lambda_i}. Tracks both directions of the base change.
class Frame {
 public:
  Frame() = default;
  explicit Frame(PModule module);

  const PModule& module() const { return module_; }
  Element basis_vector(std::size_t i) const;
  std::vector<Element> basis() const;

  /// Coordinates of x in this frame.
  Element coordinates(const Element& x) const;
  /// The element with the given frame coordinates.
  Element element(const Element& frame_coords) const;

  /// b_target += c * b_source. Requires p^{max(0, lambda_source - lambda_target)} | c,
  /// which is exactly when this is an automorphism.
  void add_multiple(std::size_t target, std::size_t source, Int c);
  /// b_i *= u for a unit u.
  void scale(std::size_t i, Int u);

 private:
  PModule module_;
  Int modulus_ = 1;
  Matrix forward_;  // rows: basis vectors in standard coordinates
  Matrix inverse_;  // standard coordinates -> frame coordinates
};

/// Adapted basis for a semisimple U: U = span{ p^{lambda_i - 1} b_i : kappa_i = 1 }.
struct SemisimpleForm {
  Frame frame;
  std::vector<int> kappa;

  std::vector<Element> basis() const { return frame.basis(); }
};

/// Throws Error(not_semisimple) unless pU = 0. Pivots on the column of least
/// exponent (lowest index on ties) of each reduced socle vector.
SemisimpleForm normalize_semisimple(const Submodule& u);

}  // namespace lrembed
