// Copyright (C) 2026 The sckv authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "error.hpp"

namespace sckv {

/// One cached token: per-token key/value states of a single attention head,
/// plus the token's position in the original (uncompressed) sequence.
struct TokenRecord {
    std::vector<float> key;
    std::vector<float> value;
    std::uint32_t position = 0;
    bool is_delimiter = false;
};

/// A single invariant violation, naming the record it occurred at.
/// `record` is npos for cache-level problems that have no single record.
struct Violation {
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t record = npos;
    std::string what;
};

/// Ordered KV cache of one attention head. Keys and values are stored
/// row-major (n x dim). Immutable after construction; the constructor
/// enforces all invariants (positive dim, matching vector lengths,
/// strictly ascending positions) and throws Error(invariant_violation)
/// listing every violation otherwise.
class KvCache {
public:
    KvCache(std::uint32_t dim,
            std::vector<float> keys,
            std::vector<float> values,
            std::vector<std::uint32_t> positions,
            std::vector<std::uint8_t> delimiter_flags);

    static KvCache from_records(std::uint32_t dim, const std::vector<TokenRecord>& records);

    std::uint32_t dim() const { return dim_; }
    std::size_t size() const { return positions_.size(); }
    bool empty() const { return positions_.empty(); }

    std::span<const float> key(std::size_t i) const {
        return {keys_.data() + i * dim_, dim_};
    }
    std::span<const float> value(std::size_t i) const {
        return {values_.data() + i * dim_, dim_};
    }
    std::uint32_t position(std::size_t i) const { return positions_[i]; }
    bool is_delimiter(std::size_t i) const { return delimiter_flags_[i] != 0; }

    const std::vector<float>& keys_flat() const { return keys_; }
    const std::vector<float>& values_flat() const { return values_; }
    const std::vector<std::uint32_t>& positions() const { return positions_; }
    const std::vector<std::uint8_t>& delimiter_flags() const { return delimiter_flags_; }

    std::size_t delimiter_count() const;
    TokenRecord record(std::size_t i) const;

private:
    std::uint32_t dim_;
    std::vector<float> keys_;
    std::vector<float> values_;
    std::vector<std::uint32_t> positions_;
    std::vector<std::uint8_t> delimiter_flags_;
};

/// Per-head caches of one attention layer. All heads share dim and length,
/// and delimiter flags agree across heads at each storage index.
class MultiHeadCache {
public:
    explicit MultiHeadCache(std::vector<KvCache> heads);

    const std::vector<KvCache>& heads() const { return heads_; }
    const KvCache& head(std::size_t h) const { return heads_[h]; }
    std::size_t head_count() const { return heads_.size(); }
    std::uint32_t dim() const { return heads_.front().dim(); }
    std::size_t len() const { return heads_.front().size(); }

private:
    std::vector<KvCache> heads_;
};

/// How delimiter identity reaches the engine. In flag_driven mode the cache
/// producer marks each record directly (the interchange format carries the
/// flag). In token_id_set mode the producer declares delimiter token ids and
/// derives flags with flags_for() before building the cache; the engine
/// itself never sees token ids.
enum class DelimiterMode { flag_driven, token_id_set };

class DelimiterSpec {
public:
    static DelimiterSpec flag_driven();
    static DelimiterSpec token_id_set(std::unordered_set<std::int64_t> ids);

    DelimiterMode mode() const { return mode_; }
    const std::unordered_set<std::int64_t>& token_ids() const { return token_ids_; }

    /// token_id_set mode only.
    bool is_delimiter(std::int64_t token_id) const;
    std::vector<std::uint8_t> flags_for(std::span<const std::int64_t> token_ids) const;

private:
    DelimiterSpec(DelimiterMode mode, std::unordered_set<std::int64_t> ids)
        : mode_(mode), token_ids_(std::move(ids)) {}

    DelimiterMode mode_;
    std::unordered_set<std::int64_t> token_ids_;
};

/// Reporting forms of cache validation. Pure functions: same input, same
/// report. validate_records covers arbitrary record lists (including ragged
/// key/value lengths that a constructed KvCache cannot represent);
/// validate_cache re-checks an already-built cache.
std::vector<Violation> validate_records(std::uint32_t dim, std::span<const TokenRecord> records);
std::vector<Violation> validate_cache(const KvCache& cache);
std::vector<Violation> validate_heads(const std::vector<KvCache>& heads);

std::string violations_to_string(const std::vector<Violation>& violations);

}  // namespace sckv
