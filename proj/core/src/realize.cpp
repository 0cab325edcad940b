#include "lrembed/realize.hpp"

#include <deque>
#include <map>

#include "lrembed/error.hpp"

namespace lrembed {

std::pair<PModule, Submodule> initial_semisimple(const Partition& lower, const Partition& upper, Int p) {
  if (!is_horizontal_strip(lower, upper)) {
    throw Error(Errc::not_horizontal_strip,
                upper.to_string() + " / " + lower.to_string() + " is not a horizontal strip");
  }
  PModule b(p, upper);
  std::vector<Element> gens;
  for (std::size_t i = 0; i < upper.length(); ++i)
    if (upper[i] - lower[i] == 1) gens.push_back(b.p_multiple(b.basis(i), upper[i] - 1));
  return {b, Submodule(b, std::move(gens))};
}

Submodule realize_step(const PartitionSequence& window, const Submodule& u) {
  if (window.size() != 3) throw Error(Errc::precondition_failed, "realize_step needs a window with two steps");
  if (!window.is_increasing() || !validate_inequalities(window)) {
    throw Error(Errc::not_lr_sequence, "window " + window.to_string() + " is not an LR sequence");
  }
  const PModule& b = u.ambient();
  if (b.lambda() != window[2]) {
    throw Error(Errc::precondition_failed,
                "type(B) = " + b.lambda().to_string() + " differs from " + window[2].to_string());
  }
  const SemisimpleForm nf = normalize_semisimple(u);
  if (quotient_type(u) != window[1]) {
    throw Error(Errc::precondition_failed,
                "type(B/U) = " + quotient_type(u).to_string() + " differs from " + window[1].to_string());
  }

  // Tableau column i carries (lambda_i, kappa_i = g2_i - g1_i); match it with a
  // frame column of the same class. The classes agree as multisets.
  std::map<std::pair<int, int>, std::deque<std::size_t>> pool;
  for (std::size_t c = 0; c < b.rank(); ++c) pool[{b.exponent(c), nf.kappa[c]}].push_back(c);
  const auto sigs = column_signatures(window);
  std::vector<std::size_t> frame_col(sigs.size());
  for (std::size_t i = 0; i < sigs.size(); ++i) {
    auto& bucket = pool[{window[2][i], window[2][i] - window[1][i]}];
    if (bucket.empty()) throw Error(Errc::internal, "realize_step: column classes do not match");
    frame_col[i] = bucket.front();
    bucket.pop_front();
  }

  const auto matching = two_to_one_matching(sigs);
  if (!matching) throw Error(Errc::internal, "realize_step: no 2-to-1 column matching for an LR window");

  auto bvec = [&](std::size_t tableau_col, int k) {
    return b.p_multiple(nf.frame.basis_vector(frame_col[tableau_col]), k);
  };
  std::vector<bool> matched_one(sigs.size(), false);
  std::vector<Element> gens;
  for (const auto& [two, one] : *matching) {
    const int ell = sigs[two].length;
    const int s = sigs[one].length;
    Element g = bvec(two, ell - 2);
    if (s < ell - 1) g = b.add(g, bvec(one, s - 1));
    gens.push_back(std::move(g));
    matched_one[one] = true;
  }
  for (std::size_t i = 0; i < sigs.size(); ++i) {
    if (sigs[i].has_one && sigs[i].has_two) gens.push_back(bvec(i, sigs[i].length - 2));
    if (sigs[i].has_one && !sigs[i].has_two && !matched_one[i]) gens.push_back(bvec(i, sigs[i].length - 1));
  }
  Submodule a = minimized(Submodule(b, std::move(gens)));

  const SequenceType type = sequence_type(window);
  if (!same_submodule(p_power(a, 1), u) || module_type(a) != type.alpha || quotient_type(a) != window[0]) {
    throw Error(Errc::internal, "realize_step: constructed A fails its postconditions for " + window.to_string());
  }
  return a;
}

Realization realize_full(const PartitionSequence& gammas, Int p) {
  if (gammas.empty() || !gammas.is_increasing() || !validate_inequalities(gammas)) {
    throw Error(Errc::not_lr_sequence, gammas.to_string() + " is not an LR sequence");
  }
  const std::size_t r = gammas.steps();
  Realization out;
  out.gammas = gammas;
  std::vector<Submodule> chain(r + 1);

  if (r == 0) {
    chain[0] = Submodule::zero(PModule(p, gammas[0]));
  } else {
    auto [b, u] = initial_semisimple(gammas[r - 1], gammas[r], p);
    chain[r] = Submodule::zero(b);
    chain[r - 1] = u;
    if (r >= 2) chain[r - 2] = realize_step(PartitionSequence({gammas[r - 2], gammas[r - 1], gammas[r]}), u);
    for (std::size_t h = r >= 2 ? r - 2 : 0; h-- > 0;) {
      // Work in B' = B / U_{h+2} = B / p U_{h+1} and pull the result back.
      const QuotientPresentation qp = quotient_presentation(chain[h + 2]);
      const Submodule u_bar = qp.image(chain[h + 1]);
      const Submodule a_bar =
          realize_step(PartitionSequence({gammas[h], gammas[h + 1], gammas[h + 2]}), u_bar);
      chain[h] = minimized(qp.preimage(a_bar));
    }
  }
  out.a = chain[0];
  out.chain = std::move(chain);

  if (auto failures = verify_realization(out); !failures.empty()) {
    throw Error(Errc::internal, "realize_full: certificate check failed: " + failures.front());
  }
  return out;
}

std::vector<std::string> verify_realization(const Realization& r) {
  std::vector<std::string> failures;
  const PModule& b = r.ambient();
  if (b.lambda() != r.gammas.back()) failures.push_back("type(B) != " + r.gammas.back().to_string());
  for (std::size_t h = 0; h < r.gammas.size(); ++h) {
    const Submodule ph = p_power(r.a, static_cast<int>(h));
    const Partition t = quotient_type(ph);
    if (t != r.gammas[h]) {
      failures.push_back("type(B/p^" + std::to_string(h) + "A) = " + t.to_string() + ", expected " +
                         r.gammas[h].to_string());
    }
    if (h < r.chain.size() && !same_submodule(ph, r.chain[h])) {
      failures.push_back("p^" + std::to_string(h) + "A differs from the stored chain entry");
    }
  }
  return failures;
}

}  // namespace lrembed
