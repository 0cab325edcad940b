#include "lrembed/pmod.hpp"

#include <algorithm>
#include <numeric>

#include "lrembed/error.hpp"
#include "lrembed/smith.hpp"

namespace lrembed {

bool is_prime(Int n) {
  if (n < 2) return false;
  for (Int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::string to_string(const Element& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(x.coords[i]);
  }
  return s + ")";
}

PModule::PModule(Int p, Partition lambda) : p_(p), lambda_(std::move(lambda)) {
  if (!is_prime(p_)) throw Error(Errc::not_prime, std::to_string(p_) + " is not a prime");
  checked_pow(p_, lambda_.largest());
  for (int part : lambda_.parts()) moduli_.push_back(checked_pow(p_, part));
}

Element PModule::basis(std::size_t i) const {
  Element e = zero();
  e.coords.at(i) = 1;
  return e;
}

Element PModule::reduce(std::vector<Int> coords) const {
  if (coords.size() != rank()) throw Error(Errc::out_of_range, "element has the wrong number of coordinates");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = floor_mod(coords[i], moduli_[i]);
  return Element{std::move(coords)};
}

bool PModule::in_range(const Element& x) const {
  if (x.coords.size() != rank()) return false;
  for (std::size_t i = 0; i < rank(); ++i)
    if (x.coords[i] < 0 || x.coords[i] >= moduli_[i]) return false;
  return true;
}

bool PModule::is_zero(const Element& x) const {
  return std::all_of(x.coords.begin(), x.coords.end(), [](Int c) { return c == 0; });
}

Element PModule::add(const Element& a, const Element& b) const {
  Element out = zero();
  for (std::size_t i = 0; i < rank(); ++i) out.coords[i] = floor_mod(a.coords[i] + b.coords[i], moduli_[i]);
  return out;
}

Element PModule::sub(const Element& a, const Element& b) const {
  Element out = zero();
  for (std::size_t i = 0; i < rank(); ++i) out.coords[i] = floor_mod(a.coords[i] - b.coords[i], moduli_[i]);
  return out;
}

Element PModule::scale(const Element& a, Int c) const {
  Element out = zero();
  for (std::size_t i = 0; i < rank(); ++i) out.coords[i] = mul_mod(a.coords[i], c, moduli_[i]);
  return out;
}

Element PModule::p_multiple(const Element& a, int k) const {
  if (k >= precision()) return zero();
  return scale(a, checked_pow(p_, k));
}

int PModule::order_exponent(const Element& x) const {
  int e = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    e = std::max(e, lambda_[i] - valuation(x.coords[i], p_, lambda_[i]));
  return e;
}

Submodule::Submodule(PModule ambient, std::vector<Element> generators)
    : ambient_(std::move(ambient)), gens_(std::move(generators)) {
  for (const auto& g : gens_) {
    if (!ambient_.in_range(g)) {
      throw Error(Errc::out_of_range, "generator " + to_string(g) + " is not a reduced element of type " +
                                          ambient_.lambda().to_string());
    }
  }
}

Submodule Submodule::whole(const PModule& ambient) {
  std::vector<Element> gens;
  for (std::size_t i = 0; i < ambient.rank(); ++i) gens.push_back(ambient.basis(i));
  return Submodule(ambient, std::move(gens));
}

QuotientPresentation quotient_presentation(const Submodule& w) {
  const PModule& b = w.ambient();
  const std::size_t n = b.rank();
  const int precision = b.precision();

  QuotientPresentation qp;
  qp.kernel = w;
  if (n == 0) {
    qp.quotient = PModule(b.p(), Partition());
    return qp;
  }

  const auto& gens = w.generators();
  Matrix rel(n + gens.size(), n);
  for (std::size_t i = 0; i < n; ++i) rel(i, i) = b.exponent(i) == precision ? 0 : b.modulus(i);
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (std::size_t i = 0; i < n; ++i) rel(n + g, i) = gens[g].coords[i];

  const SmithForm snf = smith_normal_form(rel, b.p(), precision);

  std::vector<std::size_t> factors;
  for (std::size_t t = 0; t < n; ++t)
    if (snf.valuations[t] > 0) factors.push_back(t);
  std::stable_sort(factors.begin(), factors.end(), [&](std::size_t x, std::size_t y) {
    return snf.valuations[x] > snf.valuations[y];
  });

  std::vector<int> parts;
  for (std::size_t t : factors) parts.push_back(snf.valuations[t]);
  qp.quotient = PModule(b.p(), Partition(std::move(parts)));

  qp.projection = Matrix(n, factors.size());
  qp.lift = Matrix(factors.size(), n);
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const std::size_t t = factors[k];
    for (std::size_t i = 0; i < n; ++i) {
      qp.projection(i, k) = floor_mod(snf.right(i, t), qp.quotient.modulus(k));
      qp.lift(k, i) = floor_mod(snf.right_inverse(t, i), b.modulus(i));
    }
  }
  return qp;
}

Element QuotientPresentation::project(const Element& x) const {
  const PModule& b = kernel.ambient();
  std::vector<Int> out(quotient.rank(), 0);
  for (std::size_t k = 0; k < quotient.rank(); ++k) {
    const Int m = quotient.modulus(k);
    Int acc = 0;
    for (std::size_t i = 0; i < b.rank(); ++i) acc = floor_mod(acc + mul_mod(x.coords[i], projection(i, k), m), m);
    out[k] = acc;
  }
  return Element{std::move(out)};
}

Element QuotientPresentation::lift_element(const Element& y) const {
  const PModule& b = kernel.ambient();
  std::vector<Int> out(b.rank(), 0);
  for (std::size_t i = 0; i < b.rank(); ++i) {
    const Int m = b.modulus(i);
    Int acc = 0;
    for (std::size_t k = 0; k < quotient.rank(); ++k) acc = floor_mod(acc + mul_mod(y.coords[k], lift(k, i), m), m);
    out[i] = acc;
  }
  return Element{std::move(out)};
}

Submodule QuotientPresentation::image(const Submodule& s) const {
  std::vector<Element> gens;
  for (const auto& g : s.generators()) {
    Element y = project(g);
    if (!quotient.is_zero(y)) gens.push_back(std::move(y));
  }
  return Submodule(quotient, std::move(gens));
}

Submodule QuotientPresentation::preimage(const Submodule& s) const {
  std::vector<Element> gens;
  for (const auto& g : s.generators()) gens.push_back(lift_element(g));
  for (const auto& g : kernel.generators()) gens.push_back(g);
  return Submodule(kernel.ambient(), std::move(gens));
}

Partition quotient_type(const Submodule& w) { return quotient_presentation(w).quotient.lambda(); }

Submodule p_power(const Submodule& a, int h) {
  const PModule& b = a.ambient();
  std::vector<Element> gens;
  for (const auto& g : a.generators()) {
    Element x = b.p_multiple(g, h);
    if (!b.is_zero(x)) gens.push_back(std::move(x));
  }
  return Submodule(b, std::move(gens));
}

int exponent(const Submodule& a) {
  int e = 0;
  for (const auto& g : a.generators()) e = std::max(e, a.ambient().order_exponent(g));
  return e;
}

int log_order(const Submodule& w) { return w.ambient().log_order() - quotient_type(w).weight(); }

Partition module_type(const Submodule& w) {
  const int e = exponent(w);
  std::vector<int> layers;
  int previous = log_order(w);
  for (int j = 1; j <= e; ++j) {
    const int current = log_order(p_power(w, j));
    layers.push_back(previous - current);
    previous = current;
  }
  return conjugate(Partition(std::move(layers)));
}

bool contains(const Submodule& w, const Element& x) {
  const auto qp = quotient_presentation(w);
  return qp.quotient.is_zero(qp.project(x));
}

bool contains(const Submodule& outer, const Submodule& inner) {
  const auto qp = quotient_presentation(outer);
  return std::all_of(inner.generators().begin(), inner.generators().end(),
                     [&](const Element& g) { return qp.quotient.is_zero(qp.project(g)); });
}

bool same_submodule(const Submodule& a, const Submodule& b) {
  return a.ambient() == b.ambient() && contains(a, b) && contains(b, a);
}

Submodule sum(const Submodule& a, const Submodule& b) {
  if (!(a.ambient() == b.ambient())) throw Error(Errc::precondition_failed, "sum of submodules of different modules");
  std::vector<Element> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Submodule(a.ambient(), std::move(gens));
}

Submodule minimized(const Submodule& w) {
  const PModule& b = w.ambient();
  std::vector<Element> kept;
  for (const auto& g : w.generators()) {
    if (b.is_zero(g)) continue;
    if (!kept.empty() && contains(Submodule(b, kept), g)) continue;
    kept.push_back(g);
  }
  return Submodule(b, std::move(kept));
}

Frame::Frame(PModule module)
    : module_(std::move(module)),
      modulus_(checked_pow(module_.p(), module_.precision())),
      forward_(Matrix::identity(module_.rank())),
      inverse_(Matrix::identity(module_.rank())) {}

Element Frame::basis_vector(std::size_t i) const {
  std::vector<Int> coords(forward_.row(i).begin(), forward_.row(i).end());
  return module_.reduce(std::move(coords));
}

std::vector<Element> Frame::basis() const {
  std::vector<Element> out;
  for (std::size_t i = 0; i < module_.rank(); ++i) out.push_back(basis_vector(i));
  return out;
}

Element Frame::coordinates(const Element& x) const {
  const std::size_t n = module_.rank();
  std::vector<Int> y(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    const Int m = module_.modulus(k);
    Int acc = 0;
    for (std::size_t r = 0; r < n; ++r) acc = floor_mod(acc + mul_mod(x.coords[r], inverse_(r, k), m), m);
    y[k] = acc;
  }
  return Element{std::move(y)};
}

Element Frame::element(const Element& frame_coords) const {
  const std::size_t n = module_.rank();
  std::vector<Int> x(n, 0);
  for (std::size_t c = 0; c < n; ++c) {
    const Int m = module_.modulus(c);
    Int acc = 0;
    for (std::size_t t = 0; t < n; ++t) acc = floor_mod(acc + mul_mod(frame_coords.coords[t], forward_(t, c), m), m);
    x[c] = acc;
  }
  return Element{std::move(x)};
}

void Frame::add_multiple(std::size_t target, std::size_t source, Int c) {
  const int need = std::max(0, module_.exponent(source) - module_.exponent(target));
  if (target == source || floor_mod(c, checked_pow(module_.p(), need)) != 0) {
    throw Error(Errc::internal, "Frame::add_multiple: not an automorphism");
  }
  const std::size_t n = module_.rank();
  for (std::size_t k = 0; k < n; ++k) {
    forward_(target, k) = floor_mod(forward_(target, k) + mul_mod(c, forward_(source, k), modulus_), modulus_);
    inverse_(k, source) = floor_mod(inverse_(k, source) - mul_mod(c, inverse_(k, target), modulus_), modulus_);
  }
}

void Frame::scale(std::size_t i, Int u) {
  if (u % module_.p() == 0) throw Error(Errc::internal, "Frame::scale: not a unit");
  const Int inv = inverse_mod(u, modulus_);
  for (std::size_t k = 0; k < module_.rank(); ++k) {
    forward_(i, k) = mul_mod(forward_(i, k), u, modulus_);
    inverse_(k, i) = mul_mod(inverse_(k, i), inv, modulus_);
  }
}

SemisimpleForm normalize_semisimple(const Submodule& u) {
  const PModule& b = u.ambient();
  const Int p = b.p();
  const std::size_t n = b.rank();

  // Socle coordinates over F_p.
  std::vector<std::vector<Int>> rows;
  for (const auto& g : u.generators()) {
    if (!b.is_zero(b.p_multiple(g, 1))) {
      throw Error(Errc::not_semisimple, "generator " + to_string(g) + " is not killed by p");
    }
    std::vector<Int> row(n, 0);
    for (std::size_t i = 0; i < n; ++i) row[i] = (g.coords[i] / checked_pow(p, b.exponent(i) - 1)) % p;
    rows.push_back(std::move(row));
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return b.exponent(x) < b.exponent(y); });

  // Reduced row echelon form with columns visited by increasing exponent.
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t col : order) {
    std::size_t r = next;
    while (r < rows.size() && rows[r][col] == 0) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[r], rows[next]);
    const Int inv = inverse_mod(rows[next][col], p);
    for (auto& v : rows[next]) v = mul_mod(v, inv, p);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == next || rows[k][col] == 0) continue;
      const Int f = rows[k][col];
      for (std::size_t i = 0; i < n; ++i) rows[k][i] = floor_mod(rows[k][i] - mul_mod(f, rows[next][i], p), p);
    }
    pivots.push_back(col);
    ++next;
  }

  SemisimpleForm form{Frame(b), std::vector<int>(n, 0)};
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    const std::size_t j = pivots[k];
    form.kappa[j] = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j || rows[k][i] == 0) continue;
      // Non-pivot support sits in columns of exponent >= lambda_j.
      form.frame.add_multiple(
          j, i, mul_mod(rows[k][i], checked_pow(p, b.exponent(i) - b.exponent(j)), checked_pow(p, b.precision())));
    }
  }

  std::vector<Element> socle;
  for (std::size_t j = 0; j < n; ++j)
    if (form.kappa[j]) socle.push_back(b.p_multiple(form.frame.basis_vector(j), b.exponent(j) - 1));
  if (!same_submodule(u, Submodule(b, socle))) {
    throw Error(Errc::internal, "normalize_semisimple: adapted basis does not reproduce U");
  }
  return form;
}

}  // namespace lrembed
