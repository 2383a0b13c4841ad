#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "cgs/alphabet.hpp"
#include "cgs/counts.hpp"

namespace cgs {

using Symbol = std::uint8_t;

// Fixed-length sequence of alphabet indices, one per board square.
using PositionString = std::vector<Symbol>;

// Arbitrary layered transition structure, the input of canonicalize().
//
// layers[d] holds the states of depth d as a flat row-major table of
// m_d * alphabet_size transition targets; targets index states of depth
// d + 1. Depth `length` is implicit and always has two states: 0 rejects
// and 1 accepts. No sink or numbering convention is assumed here.
struct RawDfa {
  std::uint32_t alphabet_size = 0;
  std::uint32_t length = 0;
  std::vector<std::vector<std::uint32_t>> layers;
  std::uint32_t initial = 0;

  std::uint32_t depth_states(std::uint32_t depth) const {
    if (depth == length) return 2;
    return static_cast<std::uint32_t>(layers[depth].size() / alphabet_size);
  }
};

// Canonical minimal layered DFA over strings of a fixed length.
//
// Canonical form:
//   - state index 0 at every depth is the rejecting sink (all-zero row);
//     the sink row is always materialized, even when unreachable;
//   - depth L has two implicit states, 0 = reject and 1 = accept;
//   - no two states of one depth share a transition row;
//   - non-sink states are numbered 1.. per depth in first-visit order of a
//     depth-first walk from the initial state taking symbols in ascending
//     order, so every non-sink state is reachable and accepts something;
//   - the initial state is therefore index 1 at depth 0, or index 0 when
//     the set is empty.
// Two PositionSets recognize the same language iff they are structurally
// identical, which makes equality, fixpoint detection and byte-exact
// serialization cheap.
//
// Instances are immutable after construction and cheap to copy.
class PositionSet {
 public:
  const Alphabet& alphabet() const { return *data_->alphabet; }
  const AlphabetPtr& alphabet_ptr() const { return data_->alphabet; }
  std::uint32_t alphabet_size() const { return data_->alphabet->size(); }
  std::uint32_t length() const { return data_->length; }

  // Number of states at `depth`, including the sink. Depth L reports 2 for
  // a non-empty set (accept reachable) and 1 for the empty set.
  std::uint32_t depth_states(std::uint32_t depth) const;

  std::span<const std::uint32_t> row(std::uint32_t depth, std::uint32_t state) const;

  std::uint32_t initial_state() const { return data_->initial; }
  bool empty() const { return data_->initial == 0; }

  // Membership. Executes exactly length() transition lookups regardless of
  // the set size; the lookups are recorded in telemetry().
  bool contains(const PositionString& position) const;

  // Exact number of accepted strings (single backward pass).
  SetCount count() const;

  // Reachable non-sink states over depths 0..L-1, i.e. the states that own
  // a transition row. empty -> 0, universe -> L.
  std::uint64_t num_states() const;

  // First min(limit, count) accepted strings in lexicographic symbol order.
  std::vector<PositionString> enumerate(std::uint64_t limit) const;

  // Structural comparison (includes alphabet labels). Canonical form makes
  // this equivalent to language equality.
  friend bool operator==(const PositionSet& a, const PositionSet& b);

 private:
  struct Data {
    AlphabetPtr alphabet;
    std::uint32_t length = 0;
    std::vector<std::vector<std::uint32_t>> layers;  // depths 0..L-1, flat rows
    std::uint32_t initial = 0;
  };

  explicit PositionSet(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;

  friend PositionSet canonicalize(AlphabetPtr alphabet, const RawDfa& raw);
};

// Canonical set accepting no strings.
PositionSet empty_set(AlphabetPtr alphabet, std::uint32_t length);

// Canonical set accepting all k^L strings.
PositionSet universe_set(AlphabetPtr alphabet, std::uint32_t length);

// Canonical set whose language is exactly `strings` (duplicates collapse).
PositionSet from_strings(AlphabetPtr alphabet, std::uint32_t length,
                         std::span<const PositionString> strings);

// Canonical set of all strings whose symbol at index i lies in allowed[i].
// allowed must have one entry per index; an empty entry yields the empty set.
PositionSet from_symbol_filter(AlphabetPtr alphabet,
                               const std::vector<std::vector<Symbol>>& allowed);

// Shorthand for a filter that pins individual indices to single symbols.
PositionSet from_requirements(AlphabetPtr alphabet, std::uint32_t length,
                              std::span<const std::pair<std::uint32_t, Symbol>> pins);

// Bottom-up merge of same-row states, unreachable-state pruning and
// canonical renumbering. Language preserved; result is minimal among
// layered DFAs for that language.
PositionSet canonicalize(AlphabetPtr alphabet, const RawDfa& raw);

// Language equality; throws MismatchError on alphabet/length disagreement.
bool equal(const PositionSet& a, const PositionSet& b);

// Binary DFA file format (little-endian throughout):
//   magic "CGS1", u32 version=1, u32 alphabet size k, u32 length L,
//   u64 state count per depth 0..L (sink included; depth L is 2, or 1 for
//   the empty set), then k u32 transition targets per state for each depth
//   0..L-1 in state-index order. Depth L rows are never serialized.
// Canonical sets serialize to byte-identical outputs iff their languages
// are equal.
std::vector<std::uint8_t> serialize(const PositionSet& set);
PositionSet deserialize(std::span<const std::uint8_t> bytes, AlphabetPtr alphabet);

// FNV-1a 64 over the serialized bytes, hex-encoded; used by checkpoint
// manifests to detect corrupt or mismatched files.
std::string content_hash(const PositionSet& set);

}  // namespace cgs
