#include "lrembed/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "lrembed/error.hpp"
#include "lrembed/realize.hpp"

namespace lrembed {

std::size_t ElementSet::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(__builtin_popcountll(w));
  return n;
}

std::vector<std::size_t> ElementSet::members() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < words_.size(); ++k) {
    auto w = words_[k];
    while (w != 0) {
      out.push_back(k * 64 + static_cast<std::size_t>(__builtin_ctzll(w)));
      w &= w - 1;
    }
  }
  return out;
}

ElementSet& ElementSet::operator|=(const ElementSet& o) {
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
  return *this;
}

ElementSet ElementSet::operator&(const ElementSet& o) const {
  ElementSet r = *this;
  for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] &= o.words_[k];
  return r;
}

std::size_t ElementSet::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

namespace {

constexpr std::size_t kAddTableLimit = 2048;

int log_p(std::size_t n, Int p) {
  int k = 0;
  while (n > 1) {
    n /= static_cast<std::size_t>(p);
    ++k;
  }
  return k;
}

// Partition whose conjugate has parts d_1 >= d_2 >= ... (trailing zeros ignored).
Partition from_layers(const std::vector<int>& layers) {
  std::vector<int> d;
  for (int x : layers) {
    if (x <= 0) break;
    d.push_back(x);
  }
  return conjugate(Partition(d));
}

}  // namespace

ElementSpace::ElementSpace(PModule b, std::size_t bound) : module_(std::move(b)) {
  for (std::size_t i = 0; i < module_.rank(); ++i) {
    radix_.push_back(size_);
    auto m = static_cast<std::size_t>(module_.modulus(i));
    if (size_ > bound / m) {
      throw Error(Errc::bound_exceeded, "module " + module_.lambda().to_string() + " over p=" +
                                            std::to_string(module_.p()) + " has more than " +
                                            std::to_string(bound) + " elements");
    }
    size_ *= m;
  }
  const std::size_t n = module_.rank();
  decode_cache_.resize(size_ * n);
  for (std::size_t x = 0; x < size_; ++x) {
    std::size_t rest = x;
    for (std::size_t i = 0; i < n; ++i) {
      auto m = static_cast<std::size_t>(module_.modulus(i));
      decode_cache_[x * n + i] = rest % m;
      rest /= m;
    }
  }
  times_p_.resize(size_);
  order_.resize(size_);
  for (std::size_t x = 0; x < size_; ++x) {
    times_p_[x] = multiple(x, module_.p());
  }
  for (std::size_t x = 0; x < size_; ++x) {
    int k = 0;
    for (std::size_t y = x; y != 0; y = times_p_[y]) ++k;
    order_[x] = k;
  }
  if (size_ <= kAddTableLimit) {
    add_table_.resize(size_ * size_);
    for (std::size_t a = 0; a < size_; ++a) {
      for (std::size_t b = 0; b < size_; ++b) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < n; ++i) {
          auto m = static_cast<std::size_t>(module_.modulus(i));
          idx += ((decode_cache_[a * n + i] + decode_cache_[b * n + i]) % m) * radix_[i];
        }
        add_table_[a * size_ + b] = static_cast<std::uint32_t>(idx);
      }
    }
  }
}

std::size_t ElementSpace::index(const Element& x) const {
  if (!module_.in_range(x)) throw Error(Errc::out_of_range, "element " + lrembed::to_string(x) + " out of range");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < module_.rank(); ++i) idx += static_cast<std::size_t>(x.coords[i]) * radix_[i];
  return idx;
}

Element ElementSpace::element(std::size_t x) const {
  const std::size_t n = module_.rank();
  Element e{std::vector<Int>(n)};
  for (std::size_t i = 0; i < n; ++i) e.coords[i] = static_cast<Int>(decode_cache_[x * n + i]);
  return e;
}

std::size_t ElementSpace::add(std::size_t a, std::size_t b) const {
  if (!add_table_.empty()) return add_table_[a * size_ + b];
  const std::size_t n = module_.rank();
  std::size_t idx = 0;
  for (std::size_t i = 0; i < n; ++i) {
    auto m = static_cast<std::size_t>(module_.modulus(i));
    idx += ((decode_cache_[a * n + i] + decode_cache_[b * n + i]) % m) * radix_[i];
  }
  return idx;
}

std::size_t ElementSpace::multiple(std::size_t a, Int c) const {
  const std::size_t n = module_.rank();
  std::size_t idx = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Int m = module_.modulus(i);
    Int v = mul_mod(static_cast<Int>(decode_cache_[a * n + i]), floor_mod(c, m), m);
    idx += static_cast<std::size_t>(v) * radix_[i];
  }
  return idx;
}

ElementSet ElementSpace::closure(const std::vector<std::size_t>& gens) const {
  ElementSet s = empty_set();
  s.set(0);
  std::vector<std::size_t> members{0};
  for (std::size_t g : gens) {
    if (s.test(g)) continue;
    // S + <g> is the union of the cosets S + k g up to the first k with k g in S.
    std::vector<std::size_t> grown = members;
    for (std::size_t kg = g; !s.test(kg); kg = add(kg, g)) {
      for (std::size_t m : members) grown.push_back(add(m, kg));
    }
    for (std::size_t x : grown) s.set(x);
    members = s.members();
  }
  return s;
}

ElementSet ElementSpace::closure(const Submodule& sub) const {
  std::vector<std::size_t> gens;
  for (const auto& g : sub.generators()) gens.push_back(index(g));
  return closure(gens);
}

ElementSet ElementSpace::p_power(const ElementSet& s, int k) const {
  ElementSet out = empty_set();
  for (std::size_t x : s.members()) {
    std::size_t y = x;
    for (int j = 0; j < k; ++j) y = times_p_[y];
    out.set(y);
  }
  return out;
}

ElementSet ElementSpace::preimage_of_p_power(const ElementSet& s, int k) const {
  ElementSet out = empty_set();
  for (std::size_t x = 0; x < size_; ++x) {
    std::size_t y = x;
    for (int j = 0; j < k; ++j) y = times_p_[y];
    if (s.test(y)) out.set(x);
  }
  return out;
}

Partition ElementSpace::subgroup_type(const ElementSet& s) const {
  // log_p |s[p^j]| = sum_i min(mu_i, j); successive differences are the columns of mu.
  const auto members = s.members();
  std::vector<int> layers;
  int previous = 0;
  for (int j = 1; j <= module_.precision(); ++j) {
    std::size_t c = 0;
    for (std::size_t x : members) {
      if (order_[x] <= j) ++c;
    }
    int l = log_p(c, module_.p());
    layers.push_back(l - previous);
    previous = l;
  }
  return from_layers(layers);
}

Partition ElementSpace::quotient_type(const ElementSet& s) const {
  const int base = log_p(s.count(), module_.p());
  std::vector<int> layers;
  int previous = 0;
  for (int j = 1; j <= module_.precision(); ++j) {
    int l = log_p(preimage_of_p_power(s, j).count(), module_.p()) - base;
    layers.push_back(l - previous);
    previous = l;
  }
  return from_layers(layers);
}

SubgroupCensus enumerate_submodules(const PModule& b, std::size_t bound) {
  ElementSpace space(b, bound);
  const Int p = b.p();

  std::vector<ElementSet> sets;
  std::vector<std::vector<std::size_t>> gens;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;

  ElementSet zero = space.empty_set();
  zero.set(0);
  sets.push_back(zero);
  gens.emplace_back();
  seen.emplace(zero, 0);

  // Every nonzero submodule T has a submodule S of index p, and T = S + <x>
  // for any x in T \ S; such x satisfy p x in S. Growing breadth first from 0
  // therefore reaches every submodule.
  for (std::size_t cur = 0; cur < sets.size(); ++cur) {
    const ElementSet s = sets[cur];
    const auto members = s.members();
    ElementSet tried = s;
    for (std::size_t x = 0; x < space.size(); ++x) {
      if (tried.test(x) || !s.test(space.times_p(x))) continue;
      ElementSet t = s;
      for (Int k = 1; k < p; ++k) {
        std::size_t kx = space.multiple(x, k);
        for (std::size_t m : members) t.set(space.add(m, kx));
      }
      // Every element of t \ s generates the same extension.
      tried |= t;
      if (seen.find(t) != seen.end()) continue;
      seen.emplace(t, sets.size());
      sets.push_back(t);
      auto g = gens[cur];
      g.push_back(x);
      gens.push_back(std::move(g));
    }
  }

  SubgroupCensus census{b, {}};
  census.entries.reserve(sets.size());
  for (std::size_t k = 0; k < sets.size(); ++k) {
    std::vector<Element> elements;
    for (std::size_t g : gens[k]) elements.push_back(space.element(g));
    CensusEntry e;
    e.elements = sets[k];
    e.sub = Submodule(b, std::move(elements));
    e.type_a = space.subgroup_type(sets[k]);
    std::vector<Partition> gammas;
    for (int h = 0;; ++h) {
      ElementSet ph = space.p_power(sets[k], h);
      gammas.push_back(space.quotient_type(ph));
      if (ph.count() == 1) break;
    }
    e.type_quotient = gammas.front();
    e.sequence = PartitionSequence(std::move(gammas));
    census.entries.push_back(std::move(e));
  }
  return census;
}

std::set<std::tuple<Partition, Partition, PartitionSequence>> census_profile(const SubgroupCensus& census) {
  std::set<std::tuple<Partition, Partition, PartitionSequence>> out;
  for (const auto& e : census.entries) out.emplace(e.type_a, e.type_quotient, e.sequence);
  return out;
}

Element Automorphism::apply(const Element& x) const {
  Element y = module.zero();
  for (std::size_t i = 0; i < module.rank(); ++i) y = module.add(y, module.scale(images[i], x.coords[i]));
  return y;
}

Submodule Automorphism::apply(const Submodule& s) const {
  std::vector<Element> gens;
  for (const auto& g : s.generators()) gens.push_back(apply(g));
  return Submodule(module, std::move(gens));
}

Automorphism random_automorphism(const PModule& b, std::mt19937_64& rng) {
  const std::size_t n = b.rank();
  for (;;) {
    Automorphism f{b, {}};
    for (std::size_t i = 0; i < n; ++i) {
      Element x = b.zero();
      for (std::size_t j = 0; j < n; ++j) {
        std::uniform_int_distribution<Int> dist(0, b.modulus(j) - 1);
        Int shift = checked_pow(b.p(), std::max(0, b.exponent(j) - b.exponent(i)));
        x.coords[j] = mul_mod(dist(rng), shift, b.modulus(j));
      }
      f.images.push_back(std::move(x));
    }
    // A homomorphism of a finite module onto itself is bijective.
    if (quotient_type(Submodule(b, f.images)).empty()) return f;
  }
}

std::vector<Automorphism> elementary_automorphisms(const PModule& b) {
  const std::size_t n = b.rank();
  std::vector<Element> standard;
  for (std::size_t i = 0; i < n; ++i) standard.push_back(b.basis(i));
  std::vector<Automorphism> out;
  for (std::size_t t = 0; t < n; ++t) {
    for (std::size_t s = 0; s < n; ++s) {
      if (s == t) continue;
      Automorphism f{b, standard};
      Int c = checked_pow(b.p(), std::max(0, b.exponent(s) - b.exponent(t)));
      f.images[t] = b.add(standard[t], b.scale(standard[s], c));
      out.push_back(std::move(f));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (Int u = 2; u < b.modulus(i); ++u) {
      if (u % b.p() == 0) continue;
      Automorphism f{b, standard};
      f.images[i] = b.scale(standard[i], u);
      out.push_back(std::move(f));
    }
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (b.exponent(i) != b.exponent(i + 1)) continue;
    Automorphism f{b, standard};
    std::swap(f.images[i], f.images[i + 1]);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<std::size_t> automorphism_orbits(const SubgroupCensus& census) {
  const std::size_t count = census.entries.size();
  std::size_t order = 1;
  for (std::size_t i = 0; i < census.ambient.rank(); ++i) order *= static_cast<std::size_t>(census.ambient.modulus(i));
  ElementSpace space(census.ambient, order);

  std::unordered_map<ElementSet, std::size_t, ElementSetHash> where;
  for (std::size_t k = 0; k < count; ++k) where.emplace(census.entries[k].elements, k);

  std::vector<std::size_t> parent(count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  for (const auto& f : elementary_automorphisms(census.ambient)) {
    std::vector<std::size_t> perm(space.size());
    for (std::size_t x = 0; x < space.size(); ++x) perm[x] = space.index(f.apply(space.element(x)));
    for (std::size_t k = 0; k < count; ++k) {
      ElementSet image = space.empty_set();
      for (std::size_t x : census.entries[k].elements.members()) image.set(perm[x]);
      auto it = where.find(image);
      if (it == where.end()) throw Error(Errc::internal, "automorphism image missing from census");
      std::size_t a = find(k), c = find(it->second);
      if (a != c) parent[std::max(a, c)] = std::min(a, c);
    }
  }
  std::vector<std::size_t> label(count);
  for (std::size_t k = 0; k < count; ++k) label[k] = find(k);
  return label;
}

namespace {

ElementSet sumset(const ElementSpace& space, const ElementSet& a, const ElementSet& b) {
  ElementSet out = space.empty_set();
  const auto bm = b.members();
  for (std::size_t x : a.members()) {
    for (std::size_t y : bm) out.set(space.add(x, y));
  }
  return out;
}

struct Invariants {
  std::vector<Partition> parts;
  PartitionSequence sequence;
  bool operator==(const Invariants&) const = default;
};

Invariants invariants_of(const ElementSpace& space, const ElementSet& a) {
  Invariants inv;
  ElementSet whole = space.empty_set();
  for (std::size_t x = 0; x < space.size(); ++x) whole.set(x);
  ElementSet zero = space.empty_set();
  zero.set(0);
  std::vector<Partition> gammas;
  for (int k = 0; k <= space.module().precision(); ++k) {
    ElementSet pk = space.p_power(whole, k);
    ElementSet tk = space.preimage_of_p_power(zero, k);
    inv.parts.push_back(space.subgroup_type(a & pk));
    inv.parts.push_back(space.subgroup_type(a & tk));
    inv.parts.push_back(space.quotient_type(sumset(space, a, pk)));
    inv.parts.push_back(space.quotient_type(sumset(space, a, tk)));
    gammas.push_back(space.quotient_type(space.p_power(a, k)));
  }
  inv.parts.push_back(space.subgroup_type(a));
  inv.sequence = PartitionSequence(std::move(gammas));
  return inv;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const ElementSpace& space, const ElementSet& a1, const ElementSet& a2)
      : space_(space), a2_(a2) {
    const PModule& b = space.module();
    const std::size_t n = b.rank();
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t x, std::size_t y) { return b.exponent(x) < b.exponent(y); });

    ElementSet whole = space.empty_set();
    for (std::size_t x = 0; x < space.size(); ++x) whole.set(x);

    // f(e_i) must have order p^{l_i}, and p^{l_i-1} f(e_i) must keep height l_i - 1.
    candidates_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const int l = b.exponent(i);
      ElementSet too_high = space.p_power(whole, l);
      for (std::size_t x = 0; x < space.size(); ++x) {
        if (space.order_exponent(x) != l) continue;
        std::size_t y = x;
        for (int j = 0; j + 1 < l; ++j) y = space.times_p(y);
        if (!too_high.test(y)) candidates_[i].push_back(x);
      }
    }

    // Elements of A1 become checkable once their support is assigned.
    std::vector<std::size_t> depth_of(n);
    for (std::size_t d = 0; d < n; ++d) depth_of[order_[d]] = d;
    checks_.resize(n);
    for (std::size_t x : a1.members()) {
      Element e = space.element(x);
      std::size_t deepest = 0;
      bool any = false;
      for (std::size_t i = 0; i < n; ++i) {
        if (e.coords[i] != 0) {
          deepest = std::max(deepest, depth_of[i]);
          any = true;
        }
      }
      if (any) checks_[deepest].push_back(e);
    }
    images_.assign(n, 0);
  }

  bool run() {
    ElementSet socle_span = space_.empty_set();
    socle_span.set(0);
    return extend(0, socle_span);
  }

 private:
  bool extend(std::size_t depth, const ElementSet& socle_span) {
    const std::size_t n = order_.size();
    if (depth == n) return true;
    const std::size_t i = order_[depth];
    const PModule& b = space_.module();
    for (std::size_t x : candidates_[i]) {
      std::size_t s = x;
      for (int j = 0; j + 1 < b.exponent(i); ++j) s = space_.times_p(s);
      // Injectivity lives on the socle: the images of p^{l_i-1} e_i stay independent.
      if (socle_span.test(s)) continue;
      images_[i] = x;
      bool ok = true;
      for (const auto& e : checks_[depth]) {
        std::size_t y = 0;
        for (std::size_t d = 0; d <= depth; ++d) {
          std::size_t c = order_[d];
          if (e.coords[c] != 0) y = space_.add(y, space_.multiple(images_[c], e.coords[c]));
        }
        if (!a2_.test(y)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      ElementSet grown = socle_span;
      const auto members = socle_span.members();
      std::size_t ks = s;
      for (Int k = 1; k < b.p(); ++k, ks = space_.add(ks, s)) {
        for (std::size_t m : members) grown.set(space_.add(m, ks));
      }
      if (extend(depth + 1, grown)) return true;
    }
    return false;
  }

  const ElementSpace& space_;
  const ElementSet& a2_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<std::size_t>> candidates_;
  std::vector<std::vector<Element>> checks_;
  std::vector<std::size_t> images_;
};

}  // namespace

bool embeddings_isomorphic(const Embedding& e1, const Embedding& e2, std::size_t bound) {
  if (e1.ambient().p() != e2.ambient().p()) {
    throw Error(Errc::prime_mismatch, "embeddings over p=" + std::to_string(e1.ambient().p()) + " and p=" +
                                          std::to_string(e2.ambient().p()));
  }
  if (e1.ambient().lambda() != e2.ambient().lambda()) return false;
  ElementSpace space(e1.ambient(), bound);
  ElementSet a1 = space.closure(e1.sub);
  ElementSet a2 = space.closure(e2.sub);
  if (a1.count() != a2.count()) return false;
  if (a1 == a2) return true;
  if (!(invariants_of(space, a1) == invariants_of(space, a2))) return false;
  return IsomorphismSearch(space, a1, a2).run();
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  std::size_t workers = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  workers = std::min(workers, n);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto loop = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(loop);
  if (workers > 0) loop();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

namespace {

Report check_module(const PModule& b, std::size_t bound) {
  Report rep;
  rep.p = b.p();
  rep.modules = 1;
  const Partition& beta = b.lambda();
  const std::string where = "B=" + beta.to_string() + ": ";
  SubgroupCensus census = enumerate_submodules(b, bound);
  rep.submodules = census.entries.size();

  std::map<std::pair<Partition, Partition>, std::set<PartitionSequence>> occurring;
  for (const auto& e : census.entries) {
    const std::string which = where + "A=<";
    std::string gens;
    for (const auto& g : e.sub.generators()) gens += (gens.empty() ? "" : ",") + to_string(g);
    const std::string tag = which + gens + ">: ";

    PartitionSequence via_snf = analyze(Embedding(e.sub));
    if (via_snf != e.sequence) {
      rep.violations.push_back(tag + "analyze gives " + via_snf.to_string() + " but element counts give " +
                               e.sequence.to_string());
    }
    if (!validate_inequalities(e.sequence)) {
      rep.violations.push_back(tag + "sequence " + e.sequence.to_string() + " is not an LR sequence");
    } else {
      SequenceType t = sequence_type(e.sequence);
      if (!(t == SequenceType{e.type_a, beta, e.type_quotient})) {
        rep.violations.push_back(tag + "sequence " + e.sequence.to_string() + " has type (" + t.alpha.to_string() +
                                 "," + t.beta.to_string() + "," + t.gamma.to_string() + ") but A has type " +
                                 e.type_a.to_string() + " and B/A has type " + e.type_quotient.to_string());
      }
    }
    occurring[{e.type_a, e.type_quotient}].insert(e.sequence);
  }

  const int w = beta.weight();
  for (int k = 0; k <= w; ++k) {
    for (const auto& alpha : partitions_of(k)) {
      for (const auto& gamma : partitions_of(w - k)) {
        const auto lr = enumerate_lr({alpha, beta, gamma});
        rep.lr_sequences += lr.size();
        const std::string tag = where + "type (" + alpha.to_string() + "," + beta.to_string() + "," +
                                gamma.to_string() + "): ";
        auto it = occurring.find({alpha, gamma});
        const std::set<PartitionSequence> seen = it == occurring.end() ? std::set<PartitionSequence>{} : it->second;
        const std::set<PartitionSequence> expected(lr.begin(), lr.end());
        for (const auto& s : expected) {
          if (!seen.count(s)) rep.violations.push_back(tag + "LR sequence " + s.to_string() + " has no submodule");
        }
        for (const auto& s : seen) {
          if (!expected.count(s)) rep.violations.push_back(tag + "sequence " + s.to_string() + " occurs but is not enumerated");
        }
        if (lr.empty() == (it != occurring.end())) {
          rep.violations.push_back(tag + "coefficient " + std::to_string(lr.size()) +
                                   (lr.empty() ? " but a submodule exists" : " but no submodule exists"));
        }
        for (const auto& s : lr) {
          try {
            Realization r = realize_full(s, b.p());
            ++rep.realizations;
            for (const auto& f : verify_realization(r)) rep.violations.push_back(tag + s.to_string() + ": " + f);
            PartitionSequence back = analyze(Embedding(r.a));
            if (back != s) {
              rep.violations.push_back(tag + "realization of " + s.to_string() + " analyzes to " + back.to_string());
            }
          } catch (const Error& err) {
            rep.violations.push_back(tag + "realize_full(" + s.to_string() + ") failed: " + err.what());
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace

Report cross_validate(Int p, int max_weight, std::size_t bound) {
  if (!is_prime(p)) throw Error(Errc::not_prime, std::to_string(p) + " is not a prime");
  if (max_weight < 0) throw Error(Errc::out_of_range, "max weight must be non-negative");
  std::size_t largest = 1;
  for (int k = 0; k < max_weight; ++k) {
    if (largest > bound / static_cast<std::size_t>(p)) {
      throw Error(Errc::bound_exceeded, "p^" + std::to_string(max_weight) + " exceeds the census bound " +
                                            std::to_string(bound));
    }
    largest *= static_cast<std::size_t>(p);
  }

  const auto betas = partitions_up_to(max_weight);
  std::vector<Report> parts(betas.size());
  parallel_for(betas.size(), [&](std::size_t k) { parts[k] = check_module(PModule(p, betas[k]), bound); });

  Report rep;
  rep.p = p;
  rep.max_weight = max_weight;
  for (const auto& r : parts) {
    rep.modules += r.modules;
    rep.submodules += r.submodules;
    rep.lr_sequences += r.lr_sequences;
    rep.realizations += r.realizations;
    rep.violations.insert(rep.violations.end(), r.violations.begin(), r.violations.end());
  }
  return rep;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << "cross validation p=" << p << " max_weight=" << max_weight << "\n";
  out << "  modules:      " << modules << "\n";
  out << "  submodules:   " << submodules << "\n";
  out << "  LR sequences: " << lr_sequences << "\n";
  out << "  realizations: " << realizations << "\n";
  out << "  violations:   " << violations.size() << "\n";
  for (const auto& v : violations) out << "    " << v << "\n";
  return out.str();
}

}  // namespace lrembed
