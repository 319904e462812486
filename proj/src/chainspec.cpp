#include "sl2chain/chainspec.hpp"

#include <algorithm>
#include <functional>

#include "sl2chain/rational.hpp"

namespace sl2chain {

ChainTuple ChainTuple::prefix(int k) const {
  if (k < 0 || k > length()) throw ArgumentError("prefix length out of range");
  return ChainTuple{{entries.begin(), entries.begin() + k}};
}

std::string to_string(const ChainTuple& tuple) {
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.entries.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(tuple.entries[i]);
  }
  return out + ")";
}

ModuleLayout layout(const ChainTuple& tuple) {
  if (tuple.entries.empty()) throw ArgumentError("empty tuple");
  ModuleLayout lay{tuple, {}, {}};
  const int n1 = tuple.n(1);
  int tail = 0;
  for (int i = 1; i <= tuple.length(); ++i) {
    if (i >= 2) tail += tuple.n(i);
    const int deg = i * n1 - 2 * tail;
    if (deg < 0) {
      throw InadmissibleTuple("module m" + std::to_string(i) + " of tuple " + to_string(tuple) +
                                  " has negative degree " + std::to_string(deg),
                              i);
    }
    lay.degrees.push_back(deg);
    lay.dims.push_back(deg + 1);
  }
  return lay;
}

std::string slot_key(const SlotIndex& s) {
  if (s.i < 10 && s.j < 10 && s.k < 10) {
    return std::to_string(s.i) + std::to_string(s.j) + std::to_string(s.k);
  }
  return std::to_string(s.i) + "." + std::to_string(s.j) + "." + std::to_string(s.k);
}

SlotIndex parse_slot_key(const std::string& key) {
  auto bad = [&] { return ArgumentError("malformed product slot '" + key + "'"); };
  SlotIndex s;
  if (key.find('.') == std::string::npos) {
    if (key.size() != 3) throw bad();
    for (char c : key) {
      if (c < '0' || c > '9') throw bad();
    }
    return {key[0] - '0', key[1] - '0', key[2] - '0'};
  }
  std::vector<int> parts;
  std::size_t start = 0;
  while (true) {
    const auto dot = key.find('.', start);
    const auto piece = key.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    if (piece.empty() || !std::all_of(piece.begin(), piece.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw bad();
    }
    parts.push_back(std::stoi(piece));
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  if (parts.size() != 3) throw bad();
  return {parts[0], parts[1], parts[2]};
}

namespace {

void check_slot(const ModuleLayout& lay, int i, int j, int k) {
  if (!(1 <= i && i <= j && i + j <= k && k <= lay.t())) {
    throw ArgumentError("product slot (" + std::to_string(i) + "," + std::to_string(j) + "," +
                        std::to_string(k) + ") violates 1 <= i <= j, i+j <= k <= " +
                        std::to_string(lay.t()));
  }
}

}  // namespace

std::optional<int> c_index(const ModuleLayout& lay, int i, int j, int k) {
  check_slot(lay, i, j, k);
  const int twice = lay.degree(i) + lay.degree(j) - lay.degree(k);
  if (twice % 2 != 0) return std::nullopt;
  const int c = twice / 2;
  if (c < 0 || c > std::min(lay.degree(i), lay.degree(j))) return std::nullopt;
  return c;
}

std::string to_string(SlotStatus s) {
  switch (s) {
    case SlotStatus::Required: return "required";
    case SlotStatus::Candidate: return "candidate";
    case SlotStatus::ForcedZero: return "forced_zero";
  }
  return "?";
}

std::string to_string(ForcedZeroReason r) {
  switch (r) {
    case ForcedZeroReason::None: return "none";
    case ForcedZeroReason::ParityOfC: return "parity_of_c";
    case ForcedZeroReason::COutOfRange: return "c_out_of_range";
    case ForcedZeroReason::SkewEvenC: return "skew_even_c";
  }
  return "?";
}

std::vector<ProductSlot> alpha_skeleton(const ModuleLayout& lay) {
  std::vector<ProductSlot> slots;
  const int t = lay.t();
  for (int i = 1; i <= t; ++i) {
    for (int j = i; i + j <= t; ++j) {
      for (int k = i + j; k <= t; ++k) {
        ProductSlot slot;
        slot.index = {i, j, k};
        const int twice = lay.degree(i) + lay.degree(j) - lay.degree(k);
        const int c = twice / 2;
        if (twice % 2 != 0) {
          slot.status = SlotStatus::ForcedZero;
          slot.reason = ForcedZeroReason::ParityOfC;
        } else if (c < 0 || c > std::min(lay.degree(i), lay.degree(j))) {
          slot.status = SlotStatus::ForcedZero;
          slot.reason = ForcedZeroReason::COutOfRange;
        } else {
          slot.order = c;
          if (i == 1 && k == j + 1) {
            slot.status = SlotStatus::Required;
          } else if (i == j && c % 2 == 0) {
            slot.status = SlotStatus::ForcedZero;
            slot.reason = ForcedZeroReason::SkewEvenC;
          } else {
            slot.status = SlotStatus::Candidate;
          }
        }
        // p_11k with i == j and required status still has to be skew.
        if (slot.status == SlotStatus::Required && i == j && c % 2 == 0) {
          slot.status = SlotStatus::ForcedZero;
          slot.reason = ForcedZeroReason::SkewEvenC;
        }
        slots.push_back(slot);
      }
    }
  }
  return slots;
}

std::string subscript(int value) {
  static const char* digits[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  std::string s = std::to_string(value);
  std::string out;
  for (char c : s) {
    if (c == '-') {
      out += "₋";
    } else {
      out += digits[c - '0'];
    }
  }
  return out;
}

AdmissibilityReport step1_admissible(const ChainTuple& tuple) {
  AdmissibilityReport report;
  auto fail = [&](ViolationKind kind, int index, std::string message) {
    report.admissible = false;
    report.violations.push_back({kind, index, std::move(message)});
  };
  const int t = tuple.length();
  if (t == 0) {
    fail(ViolationKind::EmptyTuple, 0, "tuple must have at least one entry");
    return report;
  }
  const int n1 = tuple.n(1);
  if (n1 < 0) fail(ViolationKind::NegativeEntry, 1, "n₁ must be non-negative");
  if (t == 1) return report;

  const int n2 = tuple.n(2);
  if (n2 % 2 == 0) fail(ViolationKind::N2Even, 2, "n₂ must be odd");
  if (n2 < 1 || n2 > n1) fail(ViolationKind::N2OutOfRange, 2, "n₂ must satisfy 1 ≤ n₂ ≤ n₁");

  // deg m_i for the running prefix; bounds use the degree of the previous module.
  int deg_prev = 2 * n1 - 2 * n2;
  for (int i = 2; i < t; ++i) {
    const int next = tuple.n(i + 1);
    const int bound = std::min(n1, deg_prev);
    const std::string name = "n" + subscript(i + 1);
    if (next < 0) {
      fail(ViolationKind::NegativeEntry, i + 1, name + " must be non-negative");
    } else if (next > bound) {
      fail(ViolationKind::EntryAboveBound, i + 1,
           name + " > min(n₁, deg m" + subscript(i) + ") = " + std::to_string(bound));
    }
    deg_prev = deg_prev + n1 - 2 * next;
  }
  return report;
}

std::vector<ChainTuple> enumerate_admissible(int t, int n1_max) {
  if (t < 1) throw ArgumentError("tuple length must be at least 1");
  std::vector<ChainTuple> out;
  std::vector<int> cur;
  std::function<void(int)> extend = [&](int deg_prev) {
    const int i = static_cast<int>(cur.size());  // entries so far; next is n_(i+1)
    if (i == t) {
      out.push_back(ChainTuple{cur});
      return;
    }
    const int n1 = cur[0];
    const int bound = std::min(n1, deg_prev);
    for (int next = 0; next <= bound; ++next) {
      cur.push_back(next);
      extend(deg_prev + n1 - 2 * next);
      cur.pop_back();
    }
  };
  for (int n1 = 0; n1 <= n1_max; ++n1) {
    cur = {n1};
    if (t == 1) {
      out.push_back(ChainTuple{cur});
      continue;
    }
    for (int n2 = 1; n2 <= n1; n2 += 2) {
      cur = {n1, n2};
      extend(2 * n1 - 2 * n2);
    }
  }
  return out;
}

}  // namespace sl2chain
