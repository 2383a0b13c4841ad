#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cgs {

// Ordered list of square-content labels. Index 0 is reserved for the
// empty-square label so counting automata can share that convention.
class Alphabet {
 public:
  static std::shared_ptr<const Alphabet> make(std::vector<std::string> symbols);

  // Convenience alphabet "a", "b", "c", ... used by tests and generic tools.
  static std::shared_ptr<const Alphabet> letters(std::uint32_t size);

  std::uint32_t size() const { return static_cast<std::uint32_t>(symbols_.size()); }
  const std::string& label(std::uint32_t index) const { return symbols_.at(index); }
  const std::vector<std::string>& labels() const { return symbols_; }
  std::optional<std::uint32_t> index_of(std::string_view label) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.symbols_ == b.symbols_;
  }

 private:
  explicit Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {}
  std::vector<std::string> symbols_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

}  // namespace cgs
