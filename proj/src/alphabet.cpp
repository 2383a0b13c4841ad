#include "cgs/alphabet.hpp"

#include <unordered_set>

#include "cgs/error.hpp"

namespace cgs {

std::shared_ptr<const Alphabet> Alphabet::make(std::vector<std::string> symbols) {
  if (symbols.size() < 2) {
    throw ContractError("alphabet needs at least 2 symbols");
  }
  if (symbols.size() > 256) {
    throw ContractError("alphabet larger than 256 symbols is not supported");
  }
  std::unordered_set<std::string_view> seen;
  for (const std::string& label : symbols) {
    if (label.empty()) throw ContractError("alphabet labels must be non-empty");
    if (!seen.insert(label).second) {
      throw ContractError("duplicate alphabet label: " + label);
    }
  }
  return std::shared_ptr<const Alphabet>(new Alphabet(std::move(symbols)));
}

std::shared_ptr<const Alphabet> Alphabet::letters(std::uint32_t size) {
  if (size > 26) throw ContractError("letters alphabet supports at most 26 symbols");
  std::vector<std::string> symbols;
  symbols.reserve(size);
  for (std::uint32_t i = 0; i < size; ++i) {
    symbols.emplace_back(1, static_cast<char>('a' + i));
  }
  return make(std::move(symbols));
}

std::optional<std::uint32_t> Alphabet::index_of(std::string_view label) const {
  for (std::uint32_t i = 0; i < size(); ++i) {
    if (symbols_[i] == label) return i;
  }
  return std::nullopt;
}

}  // namespace cgs
