#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sl2chain {

/// The integers (n1, ..., nt) naming the modules m_1..m_t. Not validated.
struct ChainTuple {
  std::vector<int> entries;

  int length() const { return static_cast<int>(entries.size()); }
  /// 1-based access, n(1) == n1.
  int n(int i) const { return entries.at(static_cast<std::size_t>(i - 1)); }
  ChainTuple prefix(int k) const;

  friend auto operator<=>(const ChainTuple&, const ChainTuple&) = default;
};

std::string to_string(const ChainTuple& tuple);

/// Module degrees deg m_i = i*n1 - 2*(n2 + ... + ni) and dimensions.
struct ModuleLayout {
  ChainTuple tuple;
  std::vector<int> degrees;
  std::vector<int> dims;

  int t() const { return static_cast<int>(degrees.size()); }
  /// 1-based.
  int degree(int i) const { return degrees.at(static_cast<std::size_t>(i - 1)); }
  int dim(int i) const { return dims.at(static_cast<std::size_t>(i - 1)); }
};

/// A tuple whose layout has a module of negative degree.
class InadmissibleTuple : public std::domain_error {
 public:
  InadmissibleTuple(const std::string& what, int index)
      : std::domain_error(what), index_(index) {}
  /// 1-based index of the offending module.
  int index() const { return index_; }

 private:
  int index_;
};

ModuleLayout layout(const ChainTuple& tuple);

/// Index (i, j, k) of a product p_ijk: m_i x m_j -> m_k.
struct SlotIndex {
  int i = 0;
  int j = 0;
  int k = 0;

  friend auto operator<=>(const SlotIndex&, const SlotIndex&) = default;
};

/// "112"-style key; indices >= 10 are separated by dots ("1.9.10").
std::string slot_key(const SlotIndex& s);
/// Inverse of slot_key. Throws ArgumentError on malformed keys.
SlotIndex parse_slot_key(const std::string& key);

/// Transvection order c_ijk = (deg m_i + deg m_j - deg m_k) / 2 when it is an
/// integer in [0, min(deg m_i, deg m_j)]; nullopt otherwise. Throws
/// ArgumentError unless 1 <= i <= j, i + j <= k <= t.
std::optional<int> c_index(const ModuleLayout& layout, int i, int j, int k);

enum class SlotStatus { Required, Candidate, ForcedZero };

enum class ForcedZeroReason {
  None,
  /// deg m_i + deg m_j - deg m_k is odd: no V_k summand in m_i (x) m_j.
  ParityOfC,
  /// c_ijk negative or above min(deg m_i, deg m_j).
  COutOfRange,
  /// i == j with c even: the transvection is symmetric, the product must be skew.
  SkewEvenC,
};

std::string to_string(SlotStatus s);
std::string to_string(ForcedZeroReason r);

struct ProductSlot {
  SlotIndex index;
  std::optional<int> order;
  SlotStatus status = SlotStatus::Candidate;
  ForcedZeroReason reason = ForcedZeroReason::None;
};

/// Every slot 1 <= i <= j, i + j <= k <= t, ordered by (i, j, k). Slots with
/// i == 1 and k == j + 1 are Required unless their transvection does not
/// exist, in which case they are ForcedZero (only possible for tuples that
/// fail step1_admissible).
std::vector<ProductSlot> alpha_skeleton(const ModuleLayout& layout);

enum class ViolationKind {
  EmptyTuple,
  NegativeEntry,
  N2Even,
  N2OutOfRange,
  EntryAboveBound,
};

struct Violation {
  ViolationKind kind;
  /// 1-based index of the offending entry.
  int index;
  std::string message;
};

struct AdmissibilityReport {
  bool admissible = true;
  std::vector<Violation> violations;
};

/// Integer-level checks: n2 odd with 1 <= n2 <= n1, and for i >= 2
/// 0 <= n_(i+1) <= min(n1, deg m_i).
AdmissibilityReport step1_admissible(const ChainTuple& tuple);

/// Every tuple of length t passing step1_admissible with n1 <= n1_max, in
/// lexicographic order.
std::vector<ChainTuple> enumerate_admissible(int t, int n1_max);

/// Subscript digits for display, e.g. 12 -> "₁₂".
std::string subscript(int value);

}  // namespace sl2chain
