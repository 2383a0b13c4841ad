#include "cgs/position_set.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <unordered_map>
#include <utility>

#include "cgs/error.hpp"
#include "cgs/telemetry.hpp"

namespace cgs {

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

std::uint64_t hash_row(const std::uint32_t* row, std::uint32_t k) {
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint32_t c = 0; c < k; ++c) {
    h ^= row[c];
    h *= 1099511628211ull;
    h ^= h >> 29;
  }
  return h;
}

// Deduplicates transition rows of one depth. Index 0 is pre-seeded with the
// all-zero row, which by bottom-up induction is the "accepts nothing" state.
class RowInterner {
 public:
  RowInterner(std::uint32_t k, std::vector<std::uint32_t>& rows) : k_(k), rows_(rows) {
    rows_.assign(k_, 0);
    chain_.push_back(kNone);
    head_.emplace(hash_row(rows_.data(), k_), 0);
  }

  std::uint32_t intern(const std::uint32_t* row) {
    const std::uint64_t h = hash_row(row, k_);
    const std::uint32_t fresh = static_cast<std::uint32_t>(rows_.size() / k_);
    auto [it, inserted] = head_.try_emplace(h, fresh);
    if (!inserted) {
      std::uint32_t idx = it->second;
      for (;;) {
        if (std::memcmp(rows_.data() + std::size_t(idx) * k_, row,
                        std::size_t(k_) * sizeof(std::uint32_t)) == 0) {
          return idx;
        }
        if (chain_[idx] == kNone) break;
        idx = chain_[idx];
      }
      chain_[idx] = fresh;
    }
    rows_.insert(rows_.end(), row, row + k_);
    chain_.push_back(kNone);
    return fresh;
  }

 private:
  std::uint32_t k_;
  std::vector<std::uint32_t>& rows_;
  std::vector<std::uint32_t> chain_;                      // same-hash collision chain
  std::unordered_map<std::uint64_t, std::uint32_t> head_;
};

void validate_raw(const AlphabetPtr& alphabet, const RawDfa& raw) {
  if (!alphabet) throw ContractError("canonicalize: null alphabet");
  if (alphabet->size() != raw.alphabet_size) {
    throw MismatchError("canonicalize: alphabet size does not match raw structure");
  }
  const std::uint32_t k = raw.alphabet_size;
  if (raw.layers.size() != raw.length) {
    throw ContractError("canonicalize: layer count does not match length");
  }
  for (std::uint32_t d = 0; d < raw.length; ++d) {
    if (raw.layers[d].size() % k != 0) {
      throw ContractError("canonicalize: partial transition row at depth " + std::to_string(d));
    }
    const std::uint32_t limit = raw.depth_states(d + 1);
    for (std::uint32_t target : raw.layers[d]) {
      if (target >= limit) {
        throw ContractError("canonicalize: transition target out of range at depth " +
                            std::to_string(d));
      }
    }
  }
  if (raw.initial >= raw.depth_states(0)) {
    throw ContractError("canonicalize: initial state out of range");
  }
}

}  // namespace

std::uint32_t PositionSet::depth_states(std::uint32_t depth) const {
  if (depth > data_->length) throw ContractError("depth out of range");
  if (depth == data_->length) return empty() ? 1 : 2;
  return static_cast<std::uint32_t>(data_->layers[depth].size() / alphabet_size());
}

std::span<const std::uint32_t> PositionSet::row(std::uint32_t depth, std::uint32_t state) const {
  const std::uint32_t k = alphabet_size();
  return {data_->layers[depth].data() + std::size_t(state) * k, k};
}

bool PositionSet::contains(const PositionString& position) const {
  const std::uint32_t length = data_->length;
  if (position.size() != length) {
    throw MismatchError("contains: position length does not match set length");
  }
  const std::uint32_t k = alphabet_size();
  std::uint32_t state = data_->initial;
  for (std::uint32_t d = 0; d < length; ++d) {
    const Symbol c = position[d];
    if (c >= k) throw ContractError("contains: symbol index out of range");
    state = data_->layers[d][std::size_t(state) * k + c];
  }
  telemetry().transition_lookups += length;
  telemetry().membership_tests += 1;
  return state == 1;
}

SetCount PositionSet::count() const {
  const std::uint32_t k = alphabet_size();
  std::vector<SetCount> next(2);
  next[1] = 1;
  for (std::uint32_t d = data_->length; d-- > 0;) {
    const auto& rows = data_->layers[d];
    const std::size_t m = rows.size() / k;
    std::vector<SetCount> cur(m);
    for (std::size_t s = 0; s < m; ++s) {
      SetCount total = 0;
      for (std::uint32_t c = 0; c < k; ++c) total += next[rows[s * k + c]];
      cur[s] = std::move(total);
    }
    next = std::move(cur);
  }
  return next[data_->initial];
}

std::uint64_t PositionSet::num_states() const {
  std::uint64_t total = 0;
  const std::uint32_t k = alphabet_size();
  for (const auto& rows : data_->layers) total += rows.size() / k - 1;
  return total;
}

namespace {

bool enumerate_rec(const PositionSet& set, std::uint32_t depth, std::uint32_t state,
                   std::uint64_t limit, PositionString& scratch,
                   std::vector<PositionString>& out) {
  if (depth == set.length()) {
    out.push_back(scratch);
    return out.size() >= limit;
  }
  auto row = set.row(depth, state);
  for (std::uint32_t c = 0; c < row.size(); ++c) {
    if (row[c] == 0) continue;
    scratch[depth] = static_cast<Symbol>(c);
    if (enumerate_rec(set, depth + 1, row[c], limit, scratch, out)) return true;
  }
  return false;
}

}  // namespace

std::vector<PositionString> PositionSet::enumerate(std::uint64_t limit) const {
  std::vector<PositionString> out;
  if (limit == 0 || empty()) return out;
  PositionString scratch(data_->length);
  enumerate_rec(*this, 0, data_->initial, limit, scratch, out);
  return out;
}

bool operator==(const PositionSet& a, const PositionSet& b) {
  if (a.data_ == b.data_) return true;
  return *a.data_->alphabet == *b.data_->alphabet && a.data_->length == b.data_->length &&
         a.data_->initial == b.data_->initial && a.data_->layers == b.data_->layers;
}

bool equal(const PositionSet& a, const PositionSet& b) {
  if (!(a.alphabet() == b.alphabet())) {
    throw MismatchError("equal: sets use different alphabets");
  }
  if (a.length() != b.length()) {
    throw MismatchError("equal: sets have different lengths");
  }
  return a == b;
}

PositionSet canonicalize(AlphabetPtr alphabet, const RawDfa& raw) {
  telemetry().canonicalize_calls += 1;
  validate_raw(alphabet, raw);
  const std::uint32_t k = raw.alphabet_size;
  const std::uint32_t length = raw.length;

  auto data = std::make_shared<PositionSet::Data>();
  data->alphabet = std::move(alphabet);
  data->length = length;

  if (length == 0) {
    data->initial = raw.initial;
    return PositionSet(std::move(data));
  }

  // Bottom-up: merge states with identical (already merged) rows. Merged
  // index 0 accepts nothing at every depth.
  std::vector<std::vector<std::uint32_t>> merged(length);
  std::vector<std::uint32_t> remap_next = {0, 1};
  std::vector<std::uint32_t> scratch(k);
  for (std::uint32_t d = length; d-- > 0;) {
    const auto& src = raw.layers[d];
    const std::size_t m = src.size() / k;
    std::vector<std::uint32_t> remap(m);
    RowInterner interner(k, merged[d]);
    for (std::size_t s = 0; s < m; ++s) {
      for (std::uint32_t c = 0; c < k; ++c) scratch[c] = remap_next[src[s * k + c]];
      remap[s] = interner.intern(scratch.data());
    }
    remap_next = std::move(remap);
  }
  const std::uint32_t initial_merged = remap_next[raw.initial];

  data->layers.resize(length);
  if (initial_merged == 0) {
    for (std::uint32_t d = 0; d < length; ++d) data->layers[d].assign(k, 0);
    data->initial = 0;
    return PositionSet(std::move(data));
  }

  // Top-down: keep only states reachable from the initial state and number
  // them in first-visit order (symbols ascending), sink fixed at index 0.
  std::vector<std::uint32_t> current = {initial_merged};
  for (std::uint32_t d = 0; d < length; ++d) {
    const bool final_depth = d + 1 == length;
    const std::size_t next_m = final_depth ? 2 : merged[d + 1].size() / k;
    std::vector<std::uint32_t> new_index(next_m, kNone);
    new_index[0] = 0;
    if (final_depth) new_index[1] = 1;

    std::vector<std::uint32_t> next_states;
    auto& out_rows = data->layers[d];
    out_rows.assign((1 + current.size()) * k, 0);
    for (std::size_t i = 0; i < current.size(); ++i) {
      const std::uint32_t* src_row = merged[d].data() + std::size_t(current[i]) * k;
      std::uint32_t* dst_row = out_rows.data() + (i + 1) * k;
      for (std::uint32_t c = 0; c < k; ++c) {
        const std::uint32_t t = src_row[c];
        if (t == 0) continue;
        if (new_index[t] == kNone) {
          next_states.push_back(t);
          new_index[t] = static_cast<std::uint32_t>(next_states.size());
        }
        dst_row[c] = new_index[t];
      }
    }
    current = std::move(next_states);
  }
  data->initial = 1;
  return PositionSet(std::move(data));
}

PositionSet empty_set(AlphabetPtr alphabet, std::uint32_t length) {
  if (!alphabet) throw ContractError("empty_set: null alphabet");
  RawDfa raw;
  raw.alphabet_size = alphabet->size();
  raw.length = length;
  raw.layers.assign(length, std::vector<std::uint32_t>(alphabet->size(), 0));
  raw.initial = 0;
  return canonicalize(std::move(alphabet), raw);
}

PositionSet universe_set(AlphabetPtr alphabet, std::uint32_t length) {
  if (!alphabet) throw ContractError("universe_set: null alphabet");
  const std::uint32_t k = alphabet->size();
  RawDfa raw;
  raw.alphabet_size = k;
  raw.length = length;
  raw.layers.resize(length);
  for (std::uint32_t d = 0; d < length; ++d) {
    // single chain state; targets its successor (index 0 of the next layer,
    // or the accept state at the final depth)
    raw.layers[d].assign(k, d + 1 == length ? 1 : 0);
  }
  raw.initial = length == 0 ? 1 : 0;
  return canonicalize(std::move(alphabet), raw);
}

namespace {

std::uint32_t trie_build(std::uint32_t depth, std::size_t lo, std::size_t hi,
                         std::uint32_t length, std::uint32_t k,
                         const std::vector<PositionString>& strings,
                         std::vector<std::vector<std::uint32_t>>& layers) {
  if (depth == length) return 1;
  std::vector<std::uint32_t> row(k, 0);
  std::size_t i = lo;
  while (i < hi) {
    const Symbol c = strings[i][depth];
    std::size_t j = i;
    while (j < hi && strings[j][depth] == c) ++j;
    row[c] = trie_build(depth + 1, i, j, length, k, strings, layers);
    i = j;
  }
  auto& out = layers[depth];
  out.insert(out.end(), row.begin(), row.end());
  return static_cast<std::uint32_t>(out.size() / k - 1);
}

}  // namespace

PositionSet from_strings(AlphabetPtr alphabet, std::uint32_t length,
                         std::span<const PositionString> strings) {
  if (!alphabet) throw ContractError("from_strings: null alphabet");
  const std::uint32_t k = alphabet->size();
  for (const PositionString& s : strings) {
    if (s.size() != length) {
      throw MismatchError("from_strings: string length does not match set length");
    }
    for (Symbol c : s) {
      if (c >= k) throw ContractError("from_strings: symbol index out of range");
    }
  }
  if (strings.empty()) return empty_set(std::move(alphabet), length);

  std::vector<PositionString> sorted(strings.begin(), strings.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  RawDfa raw;
  raw.alphabet_size = k;
  raw.length = length;
  raw.layers.resize(length);
  // index 0 of every layer is a dead chain so absent symbols can reject
  for (auto& layer : raw.layers) layer.assign(k, 0);
  raw.initial = trie_build(0, 0, sorted.size(), length, k, sorted, raw.layers);
  return canonicalize(std::move(alphabet), raw);
}

PositionSet from_symbol_filter(AlphabetPtr alphabet,
                               const std::vector<std::vector<Symbol>>& allowed) {
  if (!alphabet) throw ContractError("from_symbol_filter: null alphabet");
  const std::uint32_t k = alphabet->size();
  const std::uint32_t length = static_cast<std::uint32_t>(allowed.size());
  RawDfa raw;
  raw.alphabet_size = k;
  raw.length = length;
  raw.layers.resize(length);
  for (std::uint32_t d = 0; d < length; ++d) {
    auto& layer = raw.layers[d];
    layer.assign(2 * k, 0);  // state 0: dead chain, state 1: filter chain
    const std::uint32_t next = d + 1 == length ? 1 : 1;
    for (Symbol c : allowed[d]) {
      if (c >= k) throw ContractError("from_symbol_filter: symbol index out of range");
      layer[k + c] = next;
    }
  }
  raw.initial = length == 0 ? 1 : 1;
  return canonicalize(std::move(alphabet), raw);
}

PositionSet from_requirements(AlphabetPtr alphabet, std::uint32_t length,
                              std::span<const std::pair<std::uint32_t, Symbol>> pins) {
  if (!alphabet) throw ContractError("from_requirements: null alphabet");
  const std::uint32_t k = alphabet->size();
  std::vector<std::vector<Symbol>> allowed(length);
  for (std::uint32_t d = 0; d < length; ++d) {
    allowed[d].resize(k);
    for (std::uint32_t c = 0; c < k; ++c) allowed[d][c] = static_cast<Symbol>(c);
  }
  for (const auto& [index, symbol] : pins) {
    if (index >= length) throw ContractError("from_requirements: index out of range");
    if (symbol >= k) throw ContractError("from_requirements: symbol index out of range");
    allowed[index] = {symbol};
  }
  return from_symbol_filter(std::move(alphabet), allowed);
}

namespace {

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  out.push_back(static_cast<std::uint8_t>(v));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
  out.push_back(static_cast<std::uint8_t>(v >> 16));
  out.push_back(static_cast<std::uint8_t>(v >> 24));
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

struct ByteReader {
  std::span<const std::uint8_t> bytes;
  std::size_t pos = 0;

  std::uint32_t u32() {
    if (pos + 4 > bytes.size()) throw FormatError("deserialize: truncated input");
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= std::uint32_t(bytes[pos + i]) << (8 * i);
    pos += 4;
    return v;
  }

  std::uint64_t u64() {
    if (pos + 8 > bytes.size()) throw FormatError("deserialize: truncated input");
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= std::uint64_t(bytes[pos + i]) << (8 * i);
    pos += 8;
    return v;
  }
};

constexpr char kMagic[4] = {'C', 'G', 'S', '1'};
constexpr std::uint32_t kFormatVersion = 1;

}  // namespace

std::vector<std::uint8_t> serialize(const PositionSet& set) {
  telemetry().sets_serialized += 1;
  const std::uint32_t length = set.length();
  std::vector<std::uint8_t> out;
  out.insert(out.end(), kMagic, kMagic + 4);
  put_u32(out, kFormatVersion);
  put_u32(out, set.alphabet_size());
  put_u32(out, length);
  for (std::uint32_t d = 0; d <= length; ++d) put_u64(out, set.depth_states(d));
  for (std::uint32_t d = 0; d < length; ++d) {
    for (std::uint32_t s = 0; s < set.depth_states(d); ++s) {
      for (std::uint32_t target : set.row(d, s)) put_u32(out, target);
    }
  }
  return out;
}

PositionSet deserialize(std::span<const std::uint8_t> bytes, AlphabetPtr alphabet) {
  telemetry().sets_deserialized += 1;
  if (!alphabet) throw ContractError("deserialize: null alphabet");
  ByteReader in{bytes};
  if (bytes.size() < 4 || std::memcmp(bytes.data(), kMagic, 4) != 0) {
    throw FormatError("deserialize: bad magic");
  }
  in.pos = 4;
  const std::uint32_t version = in.u32();
  if (version != kFormatVersion) {
    throw FormatError("deserialize: unsupported format version " + std::to_string(version));
  }
  const std::uint32_t k = in.u32();
  if (k != alphabet->size()) {
    throw MismatchError("deserialize: alphabet size does not match file header");
  }
  const std::uint32_t length = in.u32();

  std::vector<std::uint64_t> counts(length + 1);
  for (std::uint32_t d = 0; d <= length; ++d) {
    counts[d] = in.u64();
    if (counts[d] == 0) throw FormatError("deserialize: zero state count");
  }
  if (counts[length] > 2) throw FormatError("deserialize: bad terminal state count");
  if (counts[0] > 2) throw FormatError("deserialize: bad initial depth state count");

  RawDfa raw;
  raw.alphabet_size = k;
  raw.length = length;
  raw.layers.resize(length);
  for (std::uint32_t d = 0; d < length; ++d) {
    const std::uint64_t limit = counts[d + 1];
    auto& layer = raw.layers[d];
    layer.resize(counts[d] * k);
    for (std::uint64_t i = 0; i < counts[d] * k; ++i) {
      const std::uint32_t target = in.u32();
      if (target >= limit) throw FormatError("deserialize: transition target out of range");
      layer[i] = target;
    }
  }
  if (in.pos != bytes.size()) throw FormatError("deserialize: trailing bytes");
  raw.initial = counts[0] >= 2 ? 1 : 0;
  return canonicalize(std::move(alphabet), raw);
}

std::string content_hash(const PositionSet& set) {
  const std::vector<std::uint8_t> bytes = serialize(set);
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint8_t b : bytes) {
    h ^= b;
    h *= 1099511628211ull;
  }
  static const char* digits = "0123456789abcdef";
  std::string hex(16, '0');
  for (int i = 15; i >= 0; --i) {
    hex[i] = digits[h & 0xf];
    h >>= 4;
  }
  return hex;
}

}  // namespace cgs
