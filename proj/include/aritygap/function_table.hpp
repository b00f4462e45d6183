#ifndef ARITYGAP_FUNCTION_TABLE_HPP
#define ARITYGAP_FUNCTION_TABLE_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "aritygap/errors.hpp"
#include "aritygap/field.hpp"

namespace aritygap {

/// A total function {0..k-1}^n -> {0..m-1} stored densely.  Point tuples are
/// indexed in mixed-radix order with the rightmost coordinate fastest:
/// (a_1, ..., a_n) has index ((a_1 * k + a_2) * k + ...) * k + a_n.
class FunctionTable {
public:
  FunctionTable(unsigned domain_size, unsigned codomain_size, unsigned arity);
  static FunctionTable from_values(unsigned domain_size, unsigned codomain_size, unsigned arity,
                                   std::vector<std::uint8_t> values);

  unsigned domain_size() const { return k_; }
  unsigned codomain_size() const { return m_; }
  unsigned arity() const { return n_; }
  std::size_t size() const { return values_.size(); }

  unsigned value(std::size_t index) const { return values_[index]; }
  unsigned value(std::span<const unsigned> tuple) const { return values_[pack(tuple)]; }
  void set_value(std::size_t index, unsigned v);

  std::size_t pack(std::span<const unsigned> tuple) const;
  void unpack(std::size_t index, std::span<unsigned> tuple) const;

  const std::vector<std::uint8_t>& values() const { return values_; }

  /// Exchange format: header "k m n", then k^n codomain indices in table
  /// order, whitespace separated.
  void write(std::ostream& os) const;
  static FunctionTable read(std::istream& is);

  friend bool operator==(const FunctionTable& a, const FunctionTable& b) = default;

private:
  unsigned k_, m_, n_;
  std::vector<std::uint8_t> values_;
};

/// A table together with a defined-domain predicate.  Values are meaningful
/// only at defined points; membership is recomputed on every query.
class PartialTable {
public:
  using Predicate = std::function<bool(std::span<const unsigned>)>;

  PartialTable(FunctionTable table, Predicate defined);
  /// Restriction to tuples having at least one repeated coordinate
  /// (for arity 1, every point counts as defined).
  static PartialTable repeats_restriction(const FunctionTable& table);

  const FunctionTable& table() const { return table_; }
  bool defined(std::span<const unsigned> tuple) const { return defined_(tuple); }

private:
  FunctionTable table_;
  Predicate defined_;
};

/// True when the tuple has two equal coordinates.
bool has_repeat(std::span<const unsigned> tuple);

/// The set of values occurring an odd number of times in the tuple, as a
/// bitmask over {0..63}.
std::uint64_t oddsupp(std::span<const unsigned> tuple);

/// Values of f on oddsupp classes; keys are value-set bitmasks.
struct OddSuppProfile {
  unsigned arity = 0;
  unsigned domain_size = 0;
  std::map<std::uint64_t, unsigned> values;
};

struct OddSuppResult {
  bool determined = false;
  OddSuppProfile profile;  // meaningful only when determined
};

/// 1-based indices of the variables the function actually depends on,
/// decided by exhaustive witness search.
std::vector<unsigned> essential_variables(const FunctionTable& t);
/// Same, with both witness tuples required to lie in the defined domain.
std::vector<unsigned> essential_variables(const PartialTable& t);

/// The table of f with coordinate i replaced by coordinate j (1-based).
FunctionTable identification_minor(const FunctionTable& t, unsigned i, unsigned j);

/// Minimum essential arity over all functions agreeing with t on the
/// repeat-tuples.  For arity != 2 this is the essential arity of the
/// restriction; for arity 2 it is 0 or 1 by diagonal constancy.
unsigned quasi_arity(const FunctionTable& t);

/// Groups points of the (partial) table by their oddsupp value and checks
/// constancy on each class.
OddSuppResult is_determined_by_oddsupp(const FunctionTable& t);
OddSuppResult is_determined_by_oddsupp(const PartialTable& t);

/// The two-condition test: totally symmetric and the (2<-1) minor does not
/// depend on the first variable.  Agrees with is_determined_by_oddsupp on
/// total tables.
bool oddsupp_two_condition_test(const FunctionTable& t);

bool totally_symmetric(const FunctionTable& t);

enum class TheoremCase { gap_ge3, gap2_general, gap2_ternary, gap1 };
std::string to_string(TheoremCase c);
TheoremCase theorem_case_label(unsigned gap, unsigned essential_arity);

struct MinorEssential {
  unsigned i = 0, j = 0;        // 1-based identified pair, f_{i<-j}
  unsigned essential_arity = 0;
};

struct GapReport {
  unsigned arity = 0;
  std::vector<unsigned> essential;  // 1-based
  unsigned essential_arity = 0;
  std::optional<unsigned> quasi_arity;
  unsigned gap = 0;
  TheoremCase theorem_case = TheoremCase::gap1;
  std::pair<unsigned, unsigned> witness{0, 0};  // first pair attaining the gap
  bool restriction_oddsupp = false;             // f restricted to repeats determined by oddsupp
  std::vector<MinorEssential> minor_arities;    // all ordered essential pairs
  // Ternary gap-2 witness data (filled by the classifier when it applies).
  std::optional<std::array<unsigned, 3>> ternary_pattern;
  std::optional<std::vector<unsigned>> ternary_unary;  // h as a value table
};

/// Direct computation from the definition: minimum essential-arity drop over
/// all ordered pairs of essential variables.  Requires at least two
/// essential variables.
GapReport arity_gap(const FunctionTable& t);

/// Gap predicted by the classification case analysis (quasi-arity, oddsupp
/// determination, ternary unary-witness search).  Requires t to depend on
/// all of its n >= 2 variables.  Never consults identification minors of t,
/// so it is an independent check against arity_gap.
GapReport classify_gap(const FunctionTable& t);

/// Table on the essential coordinates only; preserves the arity gap.
FunctionTable drop_inessential(const FunctionTable& t);

struct SumDecomposition {
  FunctionTable g, h;
  unsigned p = 0;
  std::pair<unsigned, unsigned> witness{0, 0};
};

/// Unique decomposition t = g + h with h vanishing on repeat tuples, h not
/// identically zero, and ess g = n - p.  The codomain group is the additive
/// group of `codomain_field` (its order must equal the codomain size).
/// Requires ess t = n >= 3 and quasi-arity n - p with p >= 1.
SumDecomposition decompose_sum(const FunctionTable& t, unsigned p, const Field& codomain_field);

}  // namespace aritygap

#endif
