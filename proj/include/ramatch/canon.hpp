/**
 * \file canon.hpp
 *
 * Canonical keys and edge orbits for partially edge-coloured complete
 * graphs. Two boards get the same key exactly when some vertex relabelling
 * combined with a target-preserving colour swap maps one onto the other,
 * which makes the key safe as a transposition-table index and lets the
 * solver branch on one Builder edge per symmetry orbit.
 *
 * The key is the lexicographically smallest edge-label string over the
 * whole group. Vertex permutations are enumerated explicitly (boards stay
 * desk-scale); per-n tables of permuted edge positions make the inner
 * comparison a few byte loads, and candidates abort at the first position
 * that exceeds the best string found so far. Colour permutations are cut
 * down first by sorting colour classes on (target, class fingerprint), so
 * only classes that are indistinguishable by those invariants are ever
 * swapped.
 *
 * Copyright 2026 the ramatch authors.
 * License: Apache License 2.0
 */

#ifndef RAMATCH_CANON_HPP
#define RAMATCH_CANON_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "ramatch/game.hpp"

namespace ramatch {

/// Keys stay exact up to this board size; the group enumeration above it
/// would cost more than the searches it serves.
constexpr int kCanonMaxVertices = 12;

/// Vertex permutations get precomputed edge tables up to here; larger
/// boards fall back to rebuilding the edge map per permutation.
constexpr int kCanonTableMaxVertices = 9;

struct CanonicalKey {
    std::string bytes;
    bool operator==(const CanonicalKey&) const = default;
    auto operator<=>(const CanonicalKey&) const = default;
};

namespace detail {

inline void check_canon_range(int n) {
    if (n > kCanonMaxVertices)
        throw std::invalid_argument("board too large for canonicalization");
}

/// All n! vertex permutations of one board size, with, for every target
/// edge position, the source edge whose label lands there.
struct PermTable {
    int n = 0;
    size_t count = 0;
    std::vector<uint8_t> perms;      ///< count x n, sigma stored as old->new
    std::vector<uint16_t> inv_edge;  ///< count x E, source edge index per target position
};

inline const PermTable& perm_table(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<PermTable>> cache;
    std::scoped_lock lock(mu);
    auto& slot = cache[n];
    if (!slot) {
        auto table = std::make_unique<PermTable>();
        table->n = n;
        const int ecount = edge_count(n);
        std::vector<uint8_t> sigma(static_cast<size_t>(n));
        std::iota(sigma.begin(), sigma.end(), 0);
        do {
            table->count += 1;
            table->perms.insert(table->perms.end(), sigma.begin(), sigma.end());
            const size_t base = table->inv_edge.size();
            table->inv_edge.resize(base + static_cast<size_t>(ecount));
            for (int e = 0; e < ecount; ++e) {
                const Edge src = edge_at(e, n);
                const Edge dst = make_edge(sigma[static_cast<size_t>(src.u)],
                                           sigma[static_cast<size_t>(src.v)]);
                table->inv_edge[base + static_cast<size_t>(edge_index(dst, n))] =
                    static_cast<uint16_t>(e);
            }
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        slot = std::move(table);
    }
    return *slot;
}

/// Permutation-invariant summary of one colour class: edge count plus the
/// sorted vertex-degree vector. Equal fingerprints are a precondition for
/// two colours to be swappable by any isomorphism.
inline std::string color_fingerprint(const BoardState& state, Color c) {
    std::vector<uint8_t> degree(static_cast<size_t>(state.n()), 0);
    int edges = 0;
    for (int ei = 0; ei < state.edge_slots(); ++ei) {
        if (state.color_at_index(ei) != c) continue;
        const Edge e = edge_at(ei, state.n());
        degree[static_cast<size_t>(e.u)] += 1;
        degree[static_cast<size_t>(e.v)] += 1;
        ++edges;
    }
    std::sort(degree.begin(), degree.end());
    std::string fp;
    fp.push_back(static_cast<char>(edges));
    fp.append(degree.begin(), degree.end());
    return fp;
}

struct ColorNormalization {
    std::vector<uint8_t> recolor;       ///< old colour -> normalized colour, index 0 fixed
    std::vector<int> sorted_targets;    ///< targets in normalized colour order
    std::vector<std::pair<int, int>> blocks;  ///< [first, last) normalized colours sharing (target, fingerprint)
};

inline ColorNormalization normalize_colors(const BoardState& state, const GameConfig& config) {
    const int t = config.colors;
    std::vector<std::pair<std::pair<int, std::string>, int>> order;
    order.reserve(static_cast<size_t>(t));
    for (Color c = 1; c <= t; ++c)
        order.push_back({{config.target(c), color_fingerprint(state, c)}, c});
    std::stable_sort(order.begin(), order.end());

    ColorNormalization norm;
    norm.recolor.assign(static_cast<size_t>(t + 1), 0);
    norm.sorted_targets.reserve(static_cast<size_t>(t));
    for (int i = 0; i < t; ++i) {
        norm.recolor[static_cast<size_t>(order[static_cast<size_t>(i)].second)] =
            static_cast<uint8_t>(i + 1);
        norm.sorted_targets.push_back(order[static_cast<size_t>(i)].first.first);
    }
    int start = 0;
    for (int i = 1; i <= t; ++i) {
        if (i == t || order[static_cast<size_t>(i)].first != order[static_cast<size_t>(start)].first) {
            norm.blocks.push_back({start + 1, i + 1});  // normalized colours are 1-based
            start = i;
        }
    }
    return norm;
}

/// Symbol remaps for every colour permutation that respects the blocks.
/// `stride` symbols per colour (1 for plain boards, 3 for annotated ones);
/// symbol 0 is always fixed.
inline std::vector<std::string> block_symbol_maps(const std::vector<std::pair<int, int>>& blocks,
                                                  int t, int stride) {
    const int alphabet = 1 + stride * t;
    std::vector<int> pi(static_cast<size_t>(t + 1));
    std::iota(pi.begin(), pi.end(), 0);

    std::vector<std::string> maps;
    const auto emit = [&]() {
        std::string m(static_cast<size_t>(alphabet), '\0');
        for (Color c = 1; c <= t; ++c)
            for (int tag = 0; tag < stride; ++tag)
                m[static_cast<size_t>(1 + stride * (c - 1) + tag)] =
                    static_cast<char>(1 + stride * (pi[static_cast<size_t>(c)] - 1) + tag);
        maps.push_back(std::move(m));
    };

    // odometer over per-block permutations
    std::vector<std::vector<int>> block_perms;
    for (auto [first, last] : blocks) {
        std::vector<int> ids;
        for (int c = first; c < last; ++c) ids.push_back(c);
        block_perms.push_back(std::move(ids));
    }
    const auto rec = [&](auto&& self, size_t bi) -> void {
        if (bi == block_perms.size()) {
            emit();
            return;
        }
        auto ids = block_perms[bi];  // copy: enumerate its permutations
        std::sort(ids.begin(), ids.end());
        do {
            const auto [first, last] = blocks[bi];
            for (int k = 0; k < last - first; ++k)
                pi[static_cast<size_t>(first + k)] = ids[static_cast<size_t>(k)];
            self(self, bi + 1);
        } while (std::next_permutation(ids.begin(), ids.end()));
    };
    rec(rec, 0);
    return maps;
}

/// Lexicographic minimum of symmap(labels[inv[pos]]) against `best`,
/// updating best in place. Returns immediately on the first position that
/// compares greater.
inline void fold_candidate(const std::string& labels, const uint16_t* inv,
                           const std::string& symmap, std::string& best) {
    const size_t ecount = labels.size();
    size_t pos = 0;
    for (; pos < ecount; ++pos) {
        const uint8_t c = static_cast<uint8_t>(
            symmap[static_cast<uint8_t>(labels[inv[pos]])]);
        const uint8_t b = static_cast<uint8_t>(best[pos]);
        if (c > b) return;
        if (c < b) break;
    }
    for (; pos < ecount; ++pos)
        best[pos] = symmap[static_cast<uint8_t>(labels[inv[pos]])];
}

inline bool candidate_equals(const std::string& labels, const uint16_t* inv,
                             const std::string& symmap) {
    for (size_t pos = 0; pos < labels.size(); ++pos)
        if (symmap[static_cast<uint8_t>(labels[inv[pos]])] != labels[pos]) return false;
    return true;
}

/// Canonical minimum string over all vertex permutations and the given
/// symbol maps. flip_map, when non-empty, remaps the symbol of an edge
/// whose endpoint order is reversed by the vertex permutation (used for
/// rooted-edge annotations).
inline std::string min_label_string(int n, const std::string& labels,
                                    const std::vector<std::string>& symbol_maps,
                                    const std::string& flip_map = {}) {
    check_canon_range(n);
    const int ecount = edge_count(n);
    std::string best(static_cast<size_t>(ecount), static_cast<char>(0xFF));
    if (ecount == 0) return best;

    const bool flips = !flip_map.empty();
    if (!flips && n <= kCanonTableMaxVertices) {
        const PermTable& table = perm_table(n);
        for (const std::string& symmap : symbol_maps)
            for (size_t p = 0; p < table.count; ++p)
                fold_candidate(labels, table.inv_edge.data() + p * static_cast<size_t>(ecount),
                               symmap, best);
        return best;
    }

    std::vector<uint8_t> sigma(static_cast<size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    std::vector<uint16_t> inv(static_cast<size_t>(ecount));
    std::string oriented(static_cast<size_t>(ecount), '\0');
    do {
        for (int e = 0; e < ecount; ++e) {
            const Edge src = edge_at(e, n);
            const int x = sigma[static_cast<size_t>(src.u)];
            const int y = sigma[static_cast<size_t>(src.v)];
            const Edge dst = x < y ? Edge{x, y} : Edge{y, x};
            const size_t q = static_cast<size_t>(edge_index(dst, n));
            inv[q] = static_cast<uint16_t>(e);
            oriented[q] = (flips && x > y)
                              ? flip_map[static_cast<uint8_t>(labels[static_cast<size_t>(e)])]
                              : labels[static_cast<size_t>(e)];
        }
        for (const std::string& symmap : symbol_maps) {
            size_t pos = 0;
            for (; pos < static_cast<size_t>(ecount); ++pos) {
                const uint8_t c = static_cast<uint8_t>(symmap[static_cast<uint8_t>(oriented[pos])]);
                const uint8_t b = static_cast<uint8_t>(best[pos]);
                if (c > b) break;
                if (c < b) {
                    for (size_t k = pos; k < static_cast<size_t>(ecount); ++k)
                        best[k] = symmap[static_cast<uint8_t>(oriented[k])];
                    break;
                }
            }
        }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return best;
}

inline std::string normalized_labels(const BoardState& state, const ColorNormalization& norm) {
    std::string labels(static_cast<size_t>(state.edge_slots()), '\0');
    for (int ei = 0; ei < state.edge_slots(); ++ei)
        labels[static_cast<size_t>(ei)] =
            static_cast<char>(norm.recolor[static_cast<size_t>(state.color_at_index(ei))]);
    return labels;
}

inline std::string key_header(int n, const std::vector<int>& sorted_targets) {
    std::string header;
    header.push_back(static_cast<char>(n));
    header.push_back(static_cast<char>(sorted_targets.size()));
    for (int r : sorted_targets) header.push_back(static_cast<char>(r));
    return header;
}

/// Bit-packs a label string whose symbols all fit in `bits` (3 bits per
/// edge suffices for up to 7 colours). Injective for fixed (length, bits).
inline std::string pack_labels(const std::string& labels, int bits) {
    std::string out((labels.size() * static_cast<size_t>(bits) + 7) / 8, '\0');
    size_t cursor = 0;
    for (const char label : labels) {
        const auto value = static_cast<uint8_t>(label);
        for (int b = 0; b < bits; ++b, ++cursor)
            if (value >> b & 1)
                out[cursor / 8] = static_cast<char>(out[cursor / 8] | (1 << (cursor % 8)));
    }
    return out;
}

}  // namespace detail

/// Complete isomorphism invariant: equal keys exactly when the boards are
/// related by a vertex permutation plus a colour permutation that keeps
/// every colour's target.
inline CanonicalKey canonical_key(const BoardState& state, const GameConfig& config) {
    detail::check_canon_range(state.n());
    const auto norm = detail::normalize_colors(state, config);
    const auto labels = detail::normalized_labels(state, norm);
    const auto maps = detail::block_symbol_maps(norm.blocks, config.colors, 1);
    CanonicalKey key;
    key.bytes = detail::key_header(state.n(), norm.sorted_targets);
    key.bytes += detail::pack_labels(
        detail::min_label_string(state.n(), labels, maps),
        std::bit_width(static_cast<unsigned>(config.colors)));
    return key;
}

/// Uncoloured edges grouped by the board's automorphisms; Builder only
/// needs to branch on one representative per group.
inline std::vector<std::vector<Edge>> canonical_edge_orbits(const BoardState& state,
                                                            const GameConfig& config) {
    detail::check_canon_range(state.n());
    const int n = state.n();
    const int ecount = edge_count(n);
    const auto norm = detail::normalize_colors(state, config);
    const auto labels = detail::normalized_labels(state, norm);
    const auto maps = detail::block_symbol_maps(norm.blocks, config.colors, 1);

    std::vector<int> parent(static_cast<size_t>(ecount));
    std::iota(parent.begin(), parent.end(), 0);
    const auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    const auto unite = [&](int x, int y) {
        x = find(x);
        y = find(y);
        if (x != y) parent[static_cast<size_t>(std::max(x, y))] = std::min(x, y);
    };

    const auto apply_automorphism = [&](const uint8_t* sigma) {
        for (int e = 0; e < ecount; ++e) {
            if (labels[static_cast<size_t>(e)] != 0) continue;
            const Edge src = edge_at(e, n);
            const Edge dst = make_edge(sigma[static_cast<size_t>(src.u)],
                                       sigma[static_cast<size_t>(src.v)]);
            unite(e, edge_index(dst, n));
        }
    };

    if (n <= kCanonTableMaxVertices) {
        const detail::PermTable& table = detail::perm_table(n);
        for (size_t p = 0; p < table.count; ++p) {
            const uint16_t* inv = table.inv_edge.data() + p * static_cast<size_t>(ecount);
            for (const std::string& symmap : maps)
                if (detail::candidate_equals(labels, inv, symmap)) {
                    apply_automorphism(table.perms.data() + p * static_cast<size_t>(n));
                    break;
                }
        }
    } else {
        std::vector<uint8_t> sigma(static_cast<size_t>(n));
        std::iota(sigma.begin(), sigma.end(), 0);
        std::vector<uint16_t> inv(static_cast<size_t>(ecount));
        do {
            for (int e = 0; e < ecount; ++e) {
                const Edge src = edge_at(e, n);
                const Edge dst = make_edge(sigma[static_cast<size_t>(src.u)],
                                           sigma[static_cast<size_t>(src.v)]);
                inv[static_cast<size_t>(edge_index(dst, n))] = static_cast<uint16_t>(e);
            }
            for (const std::string& symmap : maps)
                if (detail::candidate_equals(labels, inv.data(), symmap)) {
                    apply_automorphism(sigma.data());
                    break;
                }
        } while (std::next_permutation(sigma.begin(), sigma.end()));
    }

    std::map<int, std::vector<Edge>> groups;
    for (int e = 0; e < ecount; ++e)
        if (labels[static_cast<size_t>(e)] == 0)
            groups[find(e)].push_back(edge_at(e, n));
    std::vector<std::vector<Edge>> orbits;
    orbits.reserve(groups.size());
    for (auto& [rep, edges] : groups) orbits.push_back(std::move(edges));
    return orbits;
}

/// Smallest edge index of every orbit of uncoloured edges.
inline std::vector<int> orbit_representatives(const BoardState& state, const GameConfig& config) {
    std::vector<int> reps;
    for (const auto& orbit : canonical_edge_orbits(state, config))
        reps.push_back(edge_index(orbit.front(), state.n()));
    return reps;
}

}  // namespace ramatch

#endif  // RAMATCH_CANON_HPP
