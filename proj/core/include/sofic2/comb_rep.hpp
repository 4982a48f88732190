#pragma once

#include <cstddef>
#include <initializer_list>
#include <string_view>
#include <vector>

#include "sofic2/word.hpp"

namespace sofic2 {

/// One term u_0* v_1 u_1* ... v_m u_m* of a combinatorial representation.
struct CombTerm {
  std::vector<Word> loops;        // u_0 .. u_m, nonempty words
  std::vector<Word> connectors;   // v_1 .. v_m, possibly empty

  std::size_t arity() const noexcept { return connectors.size(); }

  /// Builds a term from the interleaved list u_0, v_1, u_1, ..., v_m, u_m.
  static CombTerm interleaved(const std::vector<Word>& words);
  /// Same, from the textual word syntax ("-" for the empty connector).
  static CombTerm parse(std::initializer_list<std::string_view> words);

  /// Interleaved list, inverse of `interleaved`.
  std::vector<Word> words() const;

  /// True when the configuration ...u_i u_i v_{i+1} u_{i+1} u_{i+1}...
  /// is aperiodic for every i.
  bool junctions_aperiodic() const;

  friend bool operator==(const CombTerm&, const CombTerm&) = default;
  friend auto operator<=>(const CombTerm&, const CombTerm&) = default;
};

/// A finite union of term shifts presenting a countable sofic shift.
class CombRep {
 public:
  CombRep() = default;
  /// Throws Error(InvalidCombRep) when a term is malformed or has a
  /// periodic junction.
  explicit CombRep(std::vector<CombTerm> terms);

  const std::vector<CombTerm>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  friend bool operator==(const CombRep&, const CombRep&) = default;

 private:
  std::vector<CombTerm> terms_;
};

}  // namespace sofic2
