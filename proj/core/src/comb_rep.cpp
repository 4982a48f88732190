#include "sofic2/comb_rep.hpp"

#include <string>
#include <variant>

#include "sofic2/error.hpp"
#include "sofic2/periodic.hpp"

namespace sofic2 {

CombTerm CombTerm::interleaved(const std::vector<Word>& words) {
  if (words.empty() || words.size() % 2 == 0) {
    throw Error(ErrorKind::InvalidCombRep, "a term needs an odd number of words u0 [v1 u1 ...]");
  }
  CombTerm t;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i % 2 == 0) {
      if (words[i].empty()) throw Error(ErrorKind::InvalidCombRep, "periodic word u_i is empty");
      t.loops.push_back(words[i]);
    } else {
      t.connectors.push_back(words[i]);
    }
  }
  return t;
}

CombTerm CombTerm::parse(std::initializer_list<std::string_view> words) {
  std::vector<Word> ws;
  for (auto w : words) ws.push_back(w.empty() ? Word{} : parse_word(w));
  return interleaved(ws);
}

std::vector<Word> CombTerm::words() const {
  std::vector<Word> out;
  for (std::size_t i = 0; i < loops.size(); ++i) {
    if (i > 0) out.push_back(connectors[i - 1]);
    out.push_back(loops[i]);
  }
  return out;
}

bool CombTerm::junctions_aperiodic() const {
  for (std::size_t i = 0; i < connectors.size(); ++i) {
    auto z = canonicalize_config(canonicalize_point(loops[i], 0), connectors[i],
                                 canonicalize_point(loops[i + 1], 0));
    if (std::holds_alternative<PeriodicPoint>(z)) return false;
  }
  return true;
}

CombRep::CombRep(std::vector<CombTerm> terms) : terms_(std::move(terms)) {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    if (t.loops.size() != t.connectors.size() + 1) {
      throw Error(ErrorKind::InvalidCombRep, "term " + std::to_string(i) + " has mismatched arity");
    }
    for (const auto& u : t.loops) {
      if (u.empty()) throw Error(ErrorKind::InvalidCombRep, "term " + std::to_string(i) + " has an empty u_i");
    }
    if (!t.junctions_aperiodic()) {
      throw Error(ErrorKind::InvalidCombRep,
                  "term " + std::to_string(i) + " has a periodic junction u_i v_{i+1} u_{i+1}");
    }
  }
}

}  // namespace sofic2
