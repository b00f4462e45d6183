#include "aritygap/function_table.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <ostream>

namespace aritygap {

namespace {

constexpr std::size_t kMaxTableSize = std::size_t(1) << 24;

std::size_t checked_size(unsigned k, unsigned n) {
  std::size_t size = 1;
  for (unsigned t = 0; t < n; ++t) {
    if (size > kMaxTableSize / k) throw PreconditionError("table too large");
    size *= k;
  }
  return size;
}

std::vector<std::size_t> strides(unsigned k, unsigned n) {
  // stride[i] = k^{n-1-i}: coordinate i's step in the packed index
  std::vector<std::size_t> s(n, 1);
  for (unsigned i = n; i-- > 1;) s[i - 1] = s[i] * k;
  return s;
}

}  // namespace

FunctionTable::FunctionTable(unsigned domain_size, unsigned codomain_size, unsigned arity)
    : k_(domain_size), m_(codomain_size), n_(arity) {
  if (k_ < 1 || k_ > 64) throw PreconditionError("domain size must be in 1..64");
  if (m_ < 1 || m_ > 255) throw PreconditionError("codomain size must be in 1..255");
  values_.assign(checked_size(k_, n_), 0);
}

FunctionTable FunctionTable::from_values(unsigned domain_size, unsigned codomain_size,
                                         unsigned arity, std::vector<std::uint8_t> values) {
  FunctionTable t(domain_size, codomain_size, arity);
  if (values.size() != t.values_.size())
    throw PreconditionError("value array length does not match k^n");
  for (std::uint8_t v : values)
    if (v >= codomain_size) throw PreconditionError("table value out of codomain range");
  t.values_ = std::move(values);
  return t;
}

void FunctionTable::set_value(std::size_t index, unsigned v) {
  if (v >= m_) throw PreconditionError("table value out of codomain range");
  values_[index] = static_cast<std::uint8_t>(v);
}

std::size_t FunctionTable::pack(std::span<const unsigned> tuple) const {
  if (tuple.size() != n_) throw PreconditionError("tuple arity mismatch");
  std::size_t idx = 0;
  for (unsigned a : tuple) {
    if (a >= k_) throw PreconditionError("tuple entry out of domain range");
    idx = idx * k_ + a;
  }
  return idx;
}

void FunctionTable::unpack(std::size_t index, std::span<unsigned> tuple) const {
  for (unsigned i = n_; i-- > 0;) {
    tuple[i] = static_cast<unsigned>(index % k_);
    index /= k_;
  }
}

void FunctionTable::write(std::ostream& os) const {
  os << k_ << ' ' << m_ << ' ' << n_ << '\n';
  for (std::size_t i = 0; i < values_.size(); ++i)
    os << unsigned(values_[i]) << (i + 1 == values_.size() ? '\n' : ' ');
  if (values_.empty()) os << '\n';
}

FunctionTable FunctionTable::read(std::istream& is) {
  unsigned k = 0, m = 0, n = 0;
  if (!(is >> k >> m >> n)) throw PreconditionError("malformed table header (expected 'k m n')");
  FunctionTable t(k, m, n);
  for (std::size_t i = 0; i < t.size(); ++i) {
    unsigned v;
    if (!(is >> v)) throw PreconditionError("table file truncated");
    t.set_value(i, v);
  }
  return t;
}

PartialTable::PartialTable(FunctionTable table, Predicate defined)
    : table_(std::move(table)), defined_(std::move(defined)) {
  if (!defined_) throw PreconditionError("partial table needs a domain predicate");
}

PartialTable PartialTable::repeats_restriction(const FunctionTable& table) {
  if (table.arity() == 1) {
    return PartialTable(table, [](std::span<const unsigned>) { return true; });
  }
  return PartialTable(table, [](std::span<const unsigned> tuple) { return has_repeat(tuple); });
}

bool has_repeat(std::span<const unsigned> tuple) {
  std::uint64_t seen = 0;
  for (unsigned a : tuple) {
    std::uint64_t bit = std::uint64_t(1) << a;
    if (seen & bit) return true;
    seen |= bit;
  }
  return false;
}

std::uint64_t oddsupp(std::span<const unsigned> tuple) {
  std::uint64_t mask = 0;
  for (unsigned a : tuple) mask ^= std::uint64_t(1) << a;
  return mask;
}

std::vector<unsigned> essential_variables(const FunctionTable& t) {
  const unsigned n = t.arity(), k = t.domain_size();
  std::vector<unsigned> out;
  if (n == 0 || k < 2) return out;
  auto stride = strides(k, n);
  for (unsigned i = 0; i < n; ++i) {
    const std::size_t s = stride[i];
    bool depends = false;
    for (std::size_t base = 0; base < t.size() && !depends; base += s * k) {
      for (std::size_t off = 0; off < s && !depends; ++off) {
        const unsigned v0 = t.value(base + off);
        for (unsigned d = 1; d < k; ++d) {
          if (t.value(base + off + d * s) != v0) {
            depends = true;
            break;
          }
        }
      }
    }
    if (depends) out.push_back(i + 1);
  }
  return out;
}

std::vector<unsigned> essential_variables(const PartialTable& pt) {
  const FunctionTable& t = pt.table();
  const unsigned n = t.arity(), k = t.domain_size();
  std::vector<unsigned> out;
  if (n == 0 || k < 2) return out;
  auto stride = strides(k, n);
  std::vector<unsigned> tuple(n);
  for (unsigned i = 0; i < n; ++i) {
    const std::size_t s = stride[i];
    bool depends = false;
    for (std::size_t base = 0; base < t.size() && !depends; base += s * k) {
      for (std::size_t off = 0; off < s && !depends; ++off) {
        t.unpack(base + off, tuple);
        bool have_first = false;
        unsigned first = 0;
        for (unsigned d = 0; d < k; ++d) {
          tuple[i] = d;
          if (!pt.defined(tuple)) continue;
          const unsigned v = t.value(base + off + d * s);
          if (!have_first) {
            first = v;
            have_first = true;
          } else if (v != first) {
            depends = true;
            break;
          }
        }
      }
    }
    if (depends) out.push_back(i + 1);
  }
  return out;
}

FunctionTable identification_minor(const FunctionTable& t, unsigned i, unsigned j) {
  const unsigned n = t.arity(), k = t.domain_size();
  if (i == j) throw PreconditionError("identification minor requires distinct variables");
  if (i < 1 || i > n || j < 1 || j > n)
    throw PreconditionError("variable index out of range");
  auto stride = strides(k, n);
  const std::size_t si = stride[i - 1], sj = stride[j - 1];
  FunctionTable out(k, t.codomain_size(), n);
  for (std::size_t idx = 0; idx < t.size(); ++idx) {
    const unsigned di = static_cast<unsigned>(idx / si % k);
    const unsigned dj = static_cast<unsigned>(idx / sj % k);
    out.set_value(idx, t.value(idx - di * si + dj * si));
  }
  return out;
}

unsigned quasi_arity(const FunctionTable& t) {
  const unsigned n = t.arity(), k = t.domain_size();
  if (n == 0) return 0;
  if (n == 1) return static_cast<unsigned>(essential_variables(t).size());
  if (n == 2) {
    // g(x1, x2) := f(x1, x1) is always a support of essential arity <= 1,
    // so the quasi-arity is 0 exactly when the diagonal is constant.
    const unsigned v0 = t.value(std::array<unsigned, 2>{0, 0});
    for (unsigned a = 1; a < k; ++a)
      if (t.value(std::array<unsigned, 2>{a, a}) != v0) return 1;
    return 0;
  }
  return static_cast<unsigned>(essential_variables(PartialTable::repeats_restriction(t)).size());
}

namespace {

OddSuppResult oddsupp_scan(const FunctionTable& t, const PartialTable* restriction) {
  OddSuppResult res;
  res.profile.arity = t.arity();
  res.profile.domain_size = t.domain_size();
  std::vector<unsigned> tuple(t.arity());
  for (std::size_t idx = 0; idx < t.size(); ++idx) {
    t.unpack(idx, tuple);
    if (restriction && !restriction->defined(tuple)) continue;
    const std::uint64_t cls = oddsupp(tuple);
    auto [it, inserted] = res.profile.values.emplace(cls, t.value(idx));
    if (!inserted && it->second != t.value(idx)) return OddSuppResult{false, {}};
  }
  res.determined = true;
  return res;
}

}  // namespace

OddSuppResult is_determined_by_oddsupp(const FunctionTable& t) { return oddsupp_scan(t, nullptr); }

OddSuppResult is_determined_by_oddsupp(const PartialTable& t) {
  return oddsupp_scan(t.table(), &t);
}

bool totally_symmetric(const FunctionTable& t) {
  const unsigned n = t.arity(), k = t.domain_size();
  if (n < 2) return true;
  auto stride = strides(k, n);
  // adjacent transpositions generate the full symmetric group
  for (unsigned i = 0; i + 1 < n; ++i) {
    const std::size_t sa = stride[i], sb = stride[i + 1];
    for (std::size_t idx = 0; idx < t.size(); ++idx) {
      const unsigned da = static_cast<unsigned>(idx / sa % k);
      const unsigned db = static_cast<unsigned>(idx / sb % k);
      const std::size_t swapped = idx - da * sa - db * sb + db * sa + da * sb;
      if (t.value(idx) != t.value(swapped)) return false;
    }
  }
  return true;
}

bool oddsupp_two_condition_test(const FunctionTable& t) {
  if (t.arity() < 2) return true;
  if (!totally_symmetric(t)) return false;
  auto minor_ess = essential_variables(identification_minor(t, 2, 1));
  return std::find(minor_ess.begin(), minor_ess.end(), 1u) == minor_ess.end();
}

std::string to_string(TheoremCase c) {
  switch (c) {
    case TheoremCase::gap_ge3: return "gap_ge3";
    case TheoremCase::gap2_general: return "gap2_general";
    case TheoremCase::gap2_ternary: return "gap2_ternary";
    case TheoremCase::gap1: return "gap1";
  }
  return "?";
}

TheoremCase theorem_case_label(unsigned gap, unsigned essential_arity) {
  if (gap >= 3) return TheoremCase::gap_ge3;
  if (gap == 2)
    return essential_arity == 3 ? TheoremCase::gap2_ternary : TheoremCase::gap2_general;
  return TheoremCase::gap1;
}

namespace {

// Searches for a nonconstant unary h and bits (b1, b2, b3) with
// f(x1, x0, x0) = h(x_{b1}), f(x0, x1, x0) = h(x_{b2}), f(x0, x0, x1) = h(x_{b3}).
// Returns the lexicographically first witness.
std::optional<std::pair<std::array<unsigned, 3>, std::vector<unsigned>>> ternary_witness(
    const FunctionTable& t) {
  const unsigned k = t.domain_size();
  // mt[x0][x1]
  std::vector<std::array<std::vector<unsigned>, 3>> m(k);
  for (unsigned x0 = 0; x0 < k; ++x0)
    for (unsigned b = 0; b < 3; ++b) m[x0][b].resize(k);
  for (unsigned x0 = 0; x0 < k; ++x0) {
    for (unsigned x1 = 0; x1 < k; ++x1) {
      m[x0][0][x1] = t.value(std::array<unsigned, 3>{x1, x0, x0});
      m[x0][1][x1] = t.value(std::array<unsigned, 3>{x0, x1, x0});
      m[x0][2][x1] = t.value(std::array<unsigned, 3>{x0, x0, x1});
    }
  }
  // mt viewed as a function of (x0, x1); extract h when it depends only on
  // the selected coordinate.
  auto extract = [&](unsigned slot, unsigned bit, std::vector<unsigned>& h) {
    for (unsigned v = 0; v < k; ++v) {
      bool have = false;
      for (unsigned w = 0; w < k; ++w) {
        const unsigned x0 = bit == 0 ? v : w;
        const unsigned x1 = bit == 0 ? w : v;
        const unsigned val = m[x0][slot][x1];
        if (!have) {
          h[v] = val;
          have = true;
        } else if (h[v] != val) {
          return false;
        }
      }
    }
    return true;
  };
  for (unsigned bits = 0; bits < 8; ++bits) {
    std::array<unsigned, 3> pattern{(bits >> 2) & 1, (bits >> 1) & 1, bits & 1};
    std::vector<unsigned> h(k), h2(k), h3(k);
    if (!extract(0, pattern[0], h)) continue;
    if (!extract(1, pattern[1], h2) || h2 != h) continue;
    if (!extract(2, pattern[2], h3) || h3 != h) continue;
    if (std::all_of(h.begin(), h.end(), [&](unsigned v) { return v == h[0]; })) continue;
    return std::make_pair(pattern, h);
  }
  return std::nullopt;
}

}  // namespace

GapReport arity_gap(const FunctionTable& t) {
  GapReport r;
  r.arity = t.arity();
  r.essential = essential_variables(t);
  r.essential_arity = static_cast<unsigned>(r.essential.size());
  if (r.essential_arity < 2)
    throw PreconditionError("arity gap undefined: fewer than two essential variables");

  unsigned best = 0;
  bool have_best = false;
  for (unsigned i : r.essential) {
    for (unsigned j : r.essential) {
      if (i == j) continue;
      const auto minor = identification_minor(t, i, j);
      const unsigned ess = static_cast<unsigned>(essential_variables(minor).size());
      r.minor_arities.push_back({i, j, ess});
      if (!have_best || ess > best) {
        best = ess;
        r.witness = {i, j};
        have_best = true;
      }
    }
  }
  r.gap = r.essential_arity - best;
  r.quasi_arity = quasi_arity(t);
  r.restriction_oddsupp = is_determined_by_oddsupp(PartialTable::repeats_restriction(t)).determined;
  r.theorem_case = theorem_case_label(r.gap, r.essential_arity);
  return r;
}

GapReport classify_gap(const FunctionTable& t) {
  const unsigned n = t.arity();
  GapReport r;
  r.arity = n;
  r.essential = essential_variables(t);
  r.essential_arity = static_cast<unsigned>(r.essential.size());
  if (n < 2 || r.essential_arity != n)
    throw PreconditionError("classification requires a function depending on all of its >= 2 variables");

  const unsigned qa = quasi_arity(t);
  r.quasi_arity = qa;
  r.restriction_oddsupp = is_determined_by_oddsupp(PartialTable::repeats_restriction(t)).determined;

  if (n == 3) {
    if (qa == 0) {
      r.gap = 3;
    } else if (auto w = ternary_witness(t)) {
      r.gap = 2;
      r.ternary_pattern = w->first;
      r.ternary_unary = w->second;
    } else {
      r.gap = 1;
    }
  } else {
    if (qa + 3 <= n) {
      r.gap = n - qa;
    } else if (qa == n - 2) {
      r.gap = 2;
    } else if (qa == n && r.restriction_oddsupp) {
      r.gap = 2;
    } else {
      r.gap = 1;
    }
  }
  r.theorem_case = theorem_case_label(r.gap, n);
  return r;
}

FunctionTable drop_inessential(const FunctionTable& t) {
  const auto ess = essential_variables(t);
  const unsigned k = t.domain_size();
  FunctionTable out(k, t.codomain_size(), static_cast<unsigned>(ess.size()));
  std::vector<unsigned> inner(ess.size()), full(t.arity(), 0);
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    out.unpack(idx, inner);
    for (std::size_t e = 0; e < ess.size(); ++e) full[ess[e] - 1] = inner[e];
    out.set_value(idx, t.value(full));
  }
  return out;
}

SumDecomposition decompose_sum(const FunctionTable& t, unsigned p, const Field& codomain_field) {
  const unsigned n = t.arity();
  if (!codomain_field.is_finite() || codomain_field.order() != t.codomain_size())
    throw PreconditionError("codomain group must match the table codomain");
  if (n < 3) throw PreconditionError("sum decomposition requires arity >= 3");
  if (essential_variables(t).size() != n)
    throw PreconditionError("sum decomposition requires all variables essential");
  if (p < 1 || p > n) throw PreconditionError("p out of range");
  if (quasi_arity(t) != n - p)
    throw PreconditionError("quasi-arity does not equal n - p; decomposition hypotheses fail");

  std::vector<bool> repeat(t.size());
  std::vector<unsigned> tuple(n);
  for (std::size_t idx = 0; idx < t.size(); ++idx) {
    t.unpack(idx, tuple);
    repeat[idx] = has_repeat(tuple);
  }

  std::optional<SumDecomposition> found;
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = 1; j <= n; ++j) {
      if (i == j) continue;
      FunctionTable g = identification_minor(t, i, j);
      if (essential_variables(g).size() != n - p) continue;
      FunctionTable h(t.domain_size(), t.codomain_size(), n);
      bool zero = true, vanishes = true;
      for (std::size_t idx = 0; idx < t.size(); ++idx) {
        const unsigned d = codomain_field.sub_index(t.value(idx), g.value(idx));
        h.set_value(idx, d);
        if (d != 0) {
          zero = false;
          if (repeat[idx]) {
            vanishes = false;
            break;
          }
        }
      }
      if (zero || !vanishes) continue;
      if (found) {
        if (!(found->g == g))
          throw VerificationError("sum decomposition is not unique: distinct witnesses found");
      } else {
        found = SumDecomposition{std::move(g), std::move(h), p, {i, j}};
      }
    }
  }
  if (!found)
    throw VerificationError("no sum decomposition found although hypotheses hold");
  return *found;
}

}  // namespace aritygap
