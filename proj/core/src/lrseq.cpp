#include "lrembed/lrseq.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "lrembed/error.hpp"

namespace lrembed {

namespace {

void require_increasing(const PartitionSequence& seq) {
  if (!seq.is_increasing()) {
    throw Error(Errc::not_increasing, "sequence " + seq.to_string() + " is not increasing");
  }
}

bool strip_condition(const PartitionSequence& seq) {
  for (std::size_t h = 1; h < seq.size(); ++h)
    if (!is_horizontal_strip(seq[h - 1], seq[h])) return false;
  return true;
}

// Suffix-sum inequality between consecutive steps ending at h (h >= 2).
bool suffix_inequality(const Partition& g0, const Partition& g1, const Partition& g2) {
  const std::size_t n = std::max({g0.length(), g1.length(), g2.length()});
  int upper = 0, lower = 0;
  for (std::size_t k = n; k-- > 0;) {
    upper += g2[k] - g1[k];
    lower += g1[k] - g0[k];
    if (upper > lower) return false;
  }
  return true;
}

std::vector<int> concatenated(const PartitionSequence& seq) {
  std::vector<int> out;
  for (const auto& g : seq) out.insert(out.end(), g.parts().begin(), g.parts().end());
  return out;
}

}  // namespace

bool PartitionSequence::is_increasing() const {
  for (std::size_t h = 1; h < gammas_.size(); ++h)
    if (!contains(gammas_[h], gammas_[h - 1])) return false;
  return true;
}

PartitionSequence PartitionSequence::window(std::size_t h) const {
  auto at = [&](std::size_t i) -> const Partition& { return gammas_[std::min(i, steps())]; };
  return PartitionSequence({at(h - 2), at(h - 1), at(h)});
}

std::string PartitionSequence::to_string() const {
  std::string s = "[";
  for (std::size_t h = 0; h < gammas_.size(); ++h) {
    if (h) s += ',';
    s += gammas_[h].to_string();
  }
  return s + "]";
}

Tableau make_tableau(const PartitionSequence& seq) {
  Tableau t;
  if (seq.empty()) return t;
  const Partition& top = seq.back();
  for (std::size_t i = 0; i < top.length(); ++i) {
    std::vector<int> column(static_cast<std::size_t>(top[i]), 0);
    for (std::size_t h = 1; h < seq.size(); ++h) {
      for (int row = std::max(seq[h - 1][i], 0); row < seq[h][i]; ++row) {
        column[static_cast<std::size_t>(row)] = static_cast<int>(h);
      }
    }
    t.columns.push_back(std::move(column));
  }
  return t;
}

std::string render_tableau(const PartitionSequence& seq) {
  const Tableau t = make_tableau(seq);
  std::string out;
  for (std::size_t row = 0; row < t.rows(); ++row) {
    for (const auto& column : t.columns) {
      if (row >= column.size()) break;
      const int h = column[row];
      out += h == 0 ? '.' : (h < 10 ? static_cast<char>('0' + h) : static_cast<char>('a' + h - 10));
    }
    out += '\n';
  }
  return out;
}

std::vector<int> reading_word(const PartitionSequence& seq) {
  if (!seq.is_increasing() || !strip_condition(seq)) return {};
  const Tableau t = make_tableau(seq);
  std::vector<int> word;
  for (std::size_t row = 0; row < t.rows(); ++row) {
    for (std::size_t i = t.columns.size(); i-- > 0;) {
      const auto& column = t.columns[i];
      if (row < column.size() && column[row] != 0) word.push_back(column[row]);
    }
  }
  return word;
}

bool is_lattice_word(std::span<const int> word) {
  std::map<int, int> count;
  for (int h : word) {
    ++count[h];
    if (h > 1 && count[h] > count[h - 1]) return false;
  }
  return true;
}

bool validate_inequalities(const PartitionSequence& seq) {
  require_increasing(seq);
  if (!strip_condition(seq)) return false;
  for (std::size_t h = 2; h < seq.size(); ++h)
    if (!suffix_inequality(seq[h - 2], seq[h - 1], seq[h])) return false;
  return true;
}

bool validate_word(const PartitionSequence& seq) {
  if (!seq.is_increasing() || !strip_condition(seq)) return false;
  const auto word = reading_word(seq);
  return is_lattice_word(word);
}

bool validate_windows(const PartitionSequence& seq) {
  require_increasing(seq);
  if (seq.steps() <= 1) return validate_inequalities(seq);
  for (std::size_t h = 2; h <= seq.steps(); ++h)
    if (!validate_inequalities(seq.window(h))) return false;
  return true;
}

SequenceType sequence_type(const PartitionSequence& seq) {
  if (seq.empty()) throw Error(Errc::precondition_failed, "empty sequence");
  require_increasing(seq);
  std::vector<int> counts;
  for (std::size_t h = 1; h < seq.size(); ++h) {
    counts.push_back(seq[h].weight() - seq[h - 1].weight());
    if (h > 1 && counts[h - 1] > counts[h - 2]) {
      throw Error(Errc::not_lr_sequence,
                  "box counts of " + seq.to_string() + " are not weakly decreasing");
    }
  }
  return {conjugate(Partition::from_parts(counts)), seq.back(), seq.front()};
}

std::vector<ColumnSignature> column_signatures(const PartitionSequence& seq) {
  if (seq.size() != 3) {
    throw Error(Errc::precondition_failed, "column signatures need a sequence with exactly two steps");
  }
  require_increasing(seq);
  if (!strip_condition(seq)) {
    throw Error(Errc::not_horizontal_strip,
                "a column of " + seq.to_string() + " would contain two equal entries");
  }
  std::vector<ColumnSignature> sigs;
  for (std::size_t i = 0; i < seq[2].length(); ++i) {
    sigs.push_back({seq[2][i], seq[1][i] > seq[0][i], seq[2][i] > seq[1][i]});
  }
  return sigs;
}

int column_rank(const ColumnSignature& sig) {
  const int l = sig.length;
  if (sig.has_one && sig.has_two) return 3 * l - 5;
  if (sig.has_two) return 3 * l - 4;
  if (sig.has_one) return 3 * l - 3;
  return 3 * l - 2;
}

bool is_column_chain(std::span<const ColumnSignature> sigs) {
  for (std::size_t i = 0; i < sigs.size(); ++i)
    for (std::size_t j = i + 1; j < sigs.size(); ++j)
      if (sigs[i] != sigs[j] && column_rank(sigs[i]) == column_rank(sigs[j])) return false;
  return true;
}

std::optional<std::vector<std::pair<std::size_t, std::size_t>>> two_to_one_matching(
    std::span<const ColumnSignature> sigs) {
  std::vector<std::size_t> twos, ones;
  for (std::size_t i = 0; i < sigs.size(); ++i) {
    if (sigs[i].has_two && !sigs[i].has_one) twos.push_back(i);
    if (sigs[i].has_one && !sigs[i].has_two) ones.push_back(i);
  }
  std::stable_sort(twos.begin(), twos.end(),
                   [&](std::size_t a, std::size_t b) { return sigs[a].length > sigs[b].length; });

  std::vector<bool> used(ones.size(), false);
  std::vector<std::pair<std::size_t, std::size_t>> matching;
  for (std::size_t two : twos) {
    std::optional<std::size_t> best;
    for (std::size_t k = 0; k < ones.size(); ++k) {
      if (used[k] || sigs[ones[k]].length >= sigs[two].length) continue;
      if (!best || sigs[ones[k]].length > sigs[ones[*best]].length) best = k;
    }
    if (!best) return std::nullopt;
    used[*best] = true;
    matching.emplace_back(two, ones[*best]);
  }
  return matching;
}

std::vector<PartitionSequence> enumerate_lr(const SequenceType& type) {
  const auto& [alpha, beta, gamma] = type;
  if (alpha.weight() + gamma.weight() != beta.weight()) {
    throw Error(Errc::weight_mismatch, "|alpha| + |gamma| != |beta| for alpha=" + alpha.to_string() +
                                           ", beta=" + beta.to_string() + ", gamma=" + gamma.to_string());
  }
  std::vector<PartitionSequence> out;
  if (!contains(beta, gamma)) return out;

  const Partition counts = conjugate(alpha);
  const std::size_t r = counts.length();
  const std::size_t width = beta.length();
  std::vector<Partition> chain{gamma};

  std::function<void()> extend = [&]() {
    const std::size_t h = chain.size();
    if (h == r + 1) {
      if (chain.back() == beta) out.emplace_back(chain);
      return;
    }
    const Partition prev = chain.back();
    const int need = counts[h - 1];
    std::vector<int> parts(width, 0);
    std::function<void(std::size_t, int)> place = [&](std::size_t k, int left) {
      if (k == width) {
        if (left != 0) return;
        Partition next = Partition::from_parts(parts);
        if (h >= 2 && !suffix_inequality(chain[h - 2], prev, next)) return;
        chain.push_back(std::move(next));
        extend();
        chain.pop_back();
        return;
      }
      for (int add = 0; add <= 1; ++add) {
        if (add > left) break;
        const int value = prev[k] + add;
        if (value > beta[k]) continue;
        if (k > 0 && value > parts[k - 1]) continue;
        parts[k] = value;
        place(k + 1, left - add);
      }
    };
    place(0, need);
  };
  extend();

  std::sort(out.begin(), out.end(), [](const PartitionSequence& a, const PartitionSequence& b) {
    return concatenated(a) < concatenated(b);
  });
  return out;
}

std::size_t lr_coefficient(const SequenceType& type) { return enumerate_lr(type).size(); }

std::vector<PartitionSequence> increasing_sequences(int max_weight, int max_part,
                                                    std::size_t max_steps) {
  const auto all = partitions_up_to(max_weight, max_part);
  std::map<Partition, std::vector<Partition>> below;
  for (const auto& outer : all)
    for (const auto& inner : all)
      if (contains(outer, inner)) below[outer].push_back(inner);

  std::vector<PartitionSequence> out;
  std::vector<Partition> rev;
  std::function<void(std::size_t)> descend = [&](std::size_t remaining) {
    if (remaining == 0) {
      out.emplace_back(std::vector<Partition>(rev.rbegin(), rev.rend()));
      return;
    }
    for (const auto& inner : below[rev.back()]) {
      rev.push_back(inner);
      descend(remaining - 1);
      rev.pop_back();
    }
  };
  for (std::size_t r = 0; r <= max_steps; ++r) {
    for (const auto& top : all) {
      rev = {top};
      descend(r);
    }
  }
  return out;
}

}  // namespace lrembed
