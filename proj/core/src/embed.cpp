#include "lrembed/embed.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "lrembed/error.hpp"

namespace lrembed {

Summand Summand::P(int ell, int m) {
  if (ell < 1 || m < 0 || m > std::min(ell, 2)) {
    throw Error(Errc::invalid_summand,
                "invalid summand P(" + std::to_string(ell) + "," + std::to_string(m) +
                    "): requires l >= 1 and 0 <= m <= min(l,2); the bound max{l,2} is rejected "
                    "because p^(l-m) is undefined for m > l");
  }
  return {SummandKind::P, ell, m};
}

Summand Summand::Q(int ell, int s) {
  if (s < 1 || s >= ell - 1) {
    throw Error(Errc::invalid_summand, "invalid summand Q(" + std::to_string(ell) + "," + std::to_string(s) +
                                           "): requires 1 <= s < l-1");
  }
  return {SummandKind::Q, ell, s};
}

std::string Summand::to_string() const {
  return std::string(kind == SummandKind::P ? "P(" : "Q(") + std::to_string(ell) + "," + std::to_string(index) +
         ")";
}

bool SummandOrder::operator()(const Summand& a, const Summand& b) const {
  auto key = [](const Summand& s) {
    return std::make_tuple(-s.ell, s.kind == SummandKind::Q ? 0 : 1, -s.index);
  };
  return key(a) < key(b);
}

void SummandMultiset::add(const Summand& s, int count) {
  if (count > 0) counts_[s] += count;
}

int SummandMultiset::count(const Summand& s) const {
  auto it = counts_.find(s);
  return it == counts_.end() ? 0 : it->second;
}

std::size_t SummandMultiset::size() const {
  std::size_t n = 0;
  for (const auto& [s, c] : counts_) n += static_cast<std::size_t>(c);
  return n;
}

std::string SummandMultiset::to_string() const {
  if (counts_.empty()) return "0";
  std::string out;
  for (const auto& [s, c] : counts_) {
    for (int i = 0; i < c; ++i) {
      if (!out.empty()) out += " + ";
      out += s.to_string();
    }
  }
  return out;
}

Embedding model(const Summand& s, Int p) {
  // Re-validate: a Summand can be built by aggregate initialization.
  const Summand checked = s.kind == SummandKind::P ? Summand::P(s.ell, s.index) : Summand::Q(s.ell, s.index);
  if (checked.kind == SummandKind::P) {
    PModule b(p, Partition{checked.ell});
    std::vector<Element> gens;
    if (checked.index > 0) gens.push_back(Element{{checked_pow(p, checked.ell - checked.index)}});
    return Embedding(b, std::move(gens));
  }
  PModule b(p, Partition{checked.ell, checked.index});
  return Embedding(b, {Element{{checked_pow(p, checked.ell - 2), checked_pow(p, checked.index - 1)}}});
}

PartitionSequence analyze(const Embedding& e) {
  const int r = exponent(e.sub);
  std::vector<Partition> gammas;
  for (int h = 0; h <= r; ++h) gammas.push_back(quotient_type(p_power(e.sub, h)));
  return PartitionSequence(std::move(gammas));
}

Embedding direct_sum(const Embedding& a, const Embedding& b) {
  const PModule& ma = a.ambient();
  const PModule& mb = b.ambient();
  if (ma.p() != mb.p()) {
    throw Error(Errc::prime_mismatch,
                "direct sum of modules over p=" + std::to_string(ma.p()) + " and p=" + std::to_string(mb.p()));
  }
  struct Slot {
    int exponent;
    int source;
    std::size_t index;
  };
  std::vector<Slot> slots;
  for (std::size_t i = 0; i < ma.rank(); ++i) slots.push_back({ma.exponent(i), 0, i});
  for (std::size_t i = 0; i < mb.rank(); ++i) slots.push_back({mb.exponent(i), 1, i});
  std::stable_sort(slots.begin(), slots.end(), [](const Slot& x, const Slot& y) { return x.exponent > y.exponent; });

  std::vector<int> parts;
  std::vector<std::size_t> where_a(ma.rank()), where_b(mb.rank());
  for (std::size_t k = 0; k < slots.size(); ++k) {
    parts.push_back(slots[k].exponent);
    (slots[k].source == 0 ? where_a : where_b)[slots[k].index] = k;
  }
  PModule m(ma.p(), Partition(std::move(parts)));

  std::vector<Element> gens;
  for (const auto& g : a.sub.generators()) {
    Element x = m.zero();
    for (std::size_t i = 0; i < ma.rank(); ++i) x.coords[where_a[i]] = g.coords[i];
    gens.push_back(std::move(x));
  }
  for (const auto& g : b.sub.generators()) {
    Element x = m.zero();
    for (std::size_t i = 0; i < mb.rank(); ++i) x.coords[where_b[i]] = g.coords[i];
    gens.push_back(std::move(x));
  }
  return Embedding(m, std::move(gens));
}

Embedding direct_sum_of_models(const SummandMultiset& summands, Int p) {
  Embedding total(PModule(p, Partition()), {});
  for (const auto& [s, count] : summands.items())
    for (int i = 0; i < count; ++i) total = direct_sum(total, model(s, p));
  return total;
}

PartitionSequence union_of(const PartitionSequence& a, const PartitionSequence& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  const std::size_t len = std::max(a.size(), b.size());
  std::vector<Partition> out;
  for (std::size_t h = 0; h < len; ++h) {
    out.push_back(union_of(a[std::min(h, a.size() - 1)], b[std::min(h, b.size() - 1)]));
  }
  return PartitionSequence(std::move(out));
}

namespace {

using Vec = std::vector<Int>;

struct Reduced {
  std::vector<Vec> rows;
  std::vector<std::size_t> pivots;
  std::vector<Vec> combos;  // rows[k] = sum_t combos[k][t] * input[t]
};

// Reduced row echelon form over F_p, visiting columns in the given order.
Reduced reduce_rows(std::vector<Vec> input, const std::vector<std::size_t>& column_order, Int p) {
  Reduced out;
  const std::size_t m = input.size();
  out.rows = std::move(input);
  for (std::size_t t = 0; t < m; ++t) {
    Vec unit(m, 0);
    unit[t] = 1;
    out.combos.push_back(std::move(unit));
  }
  auto axpy = [p](Vec& dst, const Vec& src, Int f) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = floor_mod(dst[i] - mul_mod(f, src[i], p), p);
  };
  std::size_t next = 0;
  for (std::size_t col : column_order) {
    std::size_t r = next;
    while (r < m && out.rows[r][col] == 0) ++r;
    if (r == m) continue;
    std::swap(out.rows[r], out.rows[next]);
    std::swap(out.combos[r], out.combos[next]);
    const Int inv = inverse_mod(out.rows[next][col], p);
    for (auto& v : out.rows[next]) v = mul_mod(v, inv, p);
    for (auto& v : out.combos[next]) v = mul_mod(v, inv, p);
    for (std::size_t k = 0; k < m; ++k) {
      if (k == next || out.rows[k][col] == 0) continue;
      const Int f = out.rows[k][col];
      axpy(out.rows[k], out.rows[next], f);
      axpy(out.combos[k], out.combos[next], f);
    }
    out.pivots.push_back(col);
    ++next;
  }
  out.rows.resize(next);
  out.combos.resize(next);
  return out;
}

}  // namespace

Decomposition decompose_with_certificate(const Embedding& e) {
  const PModule& b = e.ambient();
  const Int p = b.p();
  const std::size_t n = b.rank();
  const Submodule& a = e.sub;
  if (exponent(a) > 2) throw Error(Errc::not_p2_bounded, "p^2 A != 0; only p^2-bounded submodules decompose");

  const Int q = checked_pow(p, b.precision());
  auto lam = [&](std::size_t i) { return b.exponent(i); };
  auto pw = [&](int k) { return checked_pow(p, k); };

  // Stage 1: adapted basis for pA.
  SemisimpleForm nf = normalize_semisimple(p_power(a, 1));
  Frame& frame = nf.frame;
  const std::vector<int>& kappa = nf.kappa;

  auto socle_vector = [&](const Element& x) {
    const Element y = frame.coordinates(x);
    Vec v(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      const Int unit = pw(lam(i) - 1);
      if (y.coords[i] % unit != 0) throw Error(Errc::internal, "decompose: element outside the socle");
      v[i] = (y.coords[i] / unit) % p;
    }
    return v;
  };

  std::vector<std::size_t> all_columns(n);
  std::iota(all_columns.begin(), all_columns.end(), 0);
  std::vector<std::size_t> kcols, free_cols;
  for (std::size_t i = 0; i < n; ++i) (kappa[i] ? kcols : free_cols).push_back(i);

  // Lifts a_k in A with p a_k = p^{lambda_k - 1} b_k.
  const auto& gens = a.generators();
  std::vector<Vec> images;
  for (const auto& g : gens) images.push_back(socle_vector(b.p_multiple(g, 1)));
  const Reduced lifted = reduce_rows(images, all_columns, p);
  std::vector<Element> lift_of(n);
  for (std::size_t r = 0; r < lifted.rows.size(); ++r) {
    const std::size_t k = lifted.pivots[r];
    if (!kappa[k]) throw Error(Errc::internal, "decompose: pA not in adapted form");
    Element x = b.zero();
    for (std::size_t t = 0; t < gens.size(); ++t) x = b.add(x, b.scale(gens[t], lifted.combos[r][t]));
    lift_of[k] = std::move(x);
  }

  // Socle part A[p]: corrected generators g_t - sum_k s_tk a_k, plus pA itself.
  std::vector<Vec> socle_rows;
  for (std::size_t t = 0; t < gens.size(); ++t) {
    Element h = gens[t];
    for (std::size_t k : kcols) h = b.sub(h, b.scale(lift_of[k], images[t][k]));
    Vec v = socle_vector(h);
    for (std::size_t k : kcols) v[k] = 0;
    socle_rows.push_back(std::move(v));
  }

  // rho_k: free-column socle part of a_k - p^{lambda_k - 2} b_k.
  std::vector<Vec> rho(n, Vec(n, 0));
  for (std::size_t k : kcols) {
    if (lam(k) < 2) throw Error(Errc::internal, "decompose: pA meets a column of exponent 1");
    const Element y = frame.coordinates(lift_of[k]);
    for (std::size_t i : free_cols) {
      const Int unit = pw(lam(i) - 1);
      if (y.coords[i] % unit != 0) throw Error(Errc::internal, "decompose: lift has a non-socle residue");
      rho[k][i] = (y.coords[i] / unit) % p;
    }
  }

  // Elementary moves, mirrored in the frame.
  // Column move: w_i -= c w_j (lambda_i >= lambda_j, both free).
  auto column_move = [&](std::size_t i, std::size_t j, Int c) {
    c = floor_mod(c, p);
    if (c == 0) return;
    for (auto& v : socle_rows) v[i] = floor_mod(v[i] - mul_mod(c, v[j], p), p);
    for (std::size_t k : kcols) rho[k][i] = floor_mod(rho[k][i] - mul_mod(c, rho[k][j], p), p);
    frame.add_multiple(j, i, mul_mod(c, pw(lam(i) - lam(j)), q));
  };
  // Row move: rho_k += c rho_src (lambda_src >= lambda_k, both in K).
  auto row_move = [&](std::size_t k, std::size_t src, Int c) {
    c = floor_mod(c, p);
    if (c == 0) return;
    for (std::size_t i = 0; i < n; ++i) rho[k][i] = floor_mod(rho[k][i] + mul_mod(c, rho[src][i], p), p);
    frame.add_multiple(k, src, mul_mod(c, pw(lam(src) - lam(k)), q));
  };
  // Clear rho_k at a free column j with lambda_j >= lambda_k - 1.
  auto clear_entry = [&](std::size_t k, std::size_t j) {
    const Int c = rho[k][j];
    if (c == 0) return;
    if (lam(j) == lam(k) - 1) {
      frame.add_multiple(k, j, c);
    } else {
      frame.add_multiple(k, j, mul_mod(c, pw(lam(j) - lam(k) + 1), q));
    }
    rho[k][j] = 0;
  };
  auto scale_column = [&](std::size_t j, Int u) {
    const Int inv = inverse_mod(u, p);
    for (auto& v : socle_rows) v[j] = mul_mod(v[j], inv, p);
    for (std::size_t k : kcols) rho[k][j] = mul_mod(rho[k][j], inv, p);
    frame.scale(j, u);
  };

  auto by_exponent = [&](std::vector<std::size_t> cols) {
    std::stable_sort(cols.begin(), cols.end(), [&](std::size_t x, std::size_t y) { return lam(x) < lam(y); });
    return cols;
  };

  // Stage 2a: bring the socle part outside pA to coordinate form.
  const Reduced socle = reduce_rows(socle_rows, by_exponent(free_cols), p);
  socle_rows = socle.rows;
  std::set<std::size_t> socle_pivots;
  for (std::size_t r = 0; r < socle_rows.size(); ++r) {
    const std::size_t j = socle.pivots[r];
    for (std::size_t i : free_cols)
      if (i != j && socle_rows[r][i] != 0) column_move(i, j, socle_rows[r][i]);
    socle_pivots.insert(j);
  }
  for (std::size_t k : kcols)
    for (std::size_t j : socle_pivots) rho[k][j] = 0;

  // Stage 2b: residues of the lifts, longest columns first.
  std::vector<std::size_t> order = kcols;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return lam(x) > lam(y); });

  SummandMultiset summands;
  std::vector<Element> cert;
  std::set<std::size_t> used;
  auto basis_multiple = [&](std::size_t i, int k) { return b.p_multiple(frame.basis_vector(i), k); };

  std::vector<std::pair<std::size_t, std::size_t>> q_pairs;
  std::vector<std::size_t> p2_cols;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const std::size_t k = order[pos];
    std::vector<std::size_t> support;
    for (std::size_t j : free_cols) {
      if (socle_pivots.contains(j) || used.contains(j)) continue;
      if (lam(j) >= lam(k) - 1) clear_entry(k, j);
      if (rho[k][j] != 0) support.push_back(j);
    }
    if (support.empty()) {
      p2_cols.push_back(k);
      continue;
    }
    const std::size_t j = by_exponent(support).front();
    scale_column(j, rho[k][j]);
    for (std::size_t i : support)
      if (i != j) column_move(i, j, rho[k][i]);
    for (std::size_t later = pos + 1; later < order.size(); ++later) {
      const std::size_t k2 = order[later];
      if (rho[k2][j] != 0) row_move(k2, k, p - rho[k2][j]);
    }
    used.insert(j);
    q_pairs.emplace_back(k, j);
  }

  // Read off the summands and their generators in the final frame.
  for (std::size_t j : socle_pivots) {
    summands.add(Summand::P(lam(j), 1));
    cert.push_back(basis_multiple(j, lam(j) - 1));
  }
  for (std::size_t k : p2_cols) {
    summands.add(Summand::P(lam(k), 2));
    cert.push_back(basis_multiple(k, lam(k) - 2));
  }
  for (const auto& [k, j] : q_pairs) {
    summands.add(Summand::Q(lam(k), lam(j)));
    cert.push_back(b.add(basis_multiple(k, lam(k) - 2), basis_multiple(j, lam(j) - 1)));
  }
  for (std::size_t j : free_cols)
    if (!socle_pivots.contains(j) && !used.contains(j)) summands.add(Summand::P(lam(j), 0));

  if (!same_submodule(a, Submodule(b, cert))) {
    throw Error(Errc::internal, "decompose: model generators do not span A");
  }
  PartitionSequence expected;
  for (const auto& [s, count] : summands.items())
    for (int i = 0; i < count; ++i) expected = union_of(expected, analyze(model(s, p)));
  if (expected.empty()) expected = PartitionSequence({Partition()});
  if (expected != analyze(e)) {
    throw Error(Errc::internal, "decompose: union of model sequences differs from analyze(E)");
  }
  return {std::move(summands), std::move(frame), std::move(cert)};
}

SummandMultiset decompose(const Embedding& e) { return decompose_with_certificate(e).summands; }

}  // namespace lrembed
