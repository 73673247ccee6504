#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "sscat/common.hpp"
#include "sscat/sset.hpp"

namespace sscat::detail {

using Key = std::vector<Index>;

/// Position of `key` in the sorted list `level`; throws if absent.
inline Index find_key(const std::vector<Key>& level, const Key& key)
{
    auto it = std::lower_bound(level.begin(), level.end(), key);
    if (it == level.end() || *it != key) throw Error("face key not present in level below");
    return static_cast<Index>(it - level.begin());
}

/// Face tables for simplices labelled by lexicographically sorted keys.
/// `face(p, i, key)` returns the key of d_i applied to `key` at level p.
template <class FaceFn>
std::vector<Level> levels_from_keys(const std::vector<std::vector<Key>>& keys, FaceFn&& face)
{
    std::vector<Level> levels(keys.size());
    for (std::size_t p = 0; p < keys.size(); ++p) {
        levels[p].size = keys[p].size();
        if (p == 0) continue;
        levels[p].faces.assign(p + 1, std::vector<Index>(keys[p].size()));
        for (Index s = 0; s < keys[p].size(); ++s) {
            for (int i = 0; i <= static_cast<int>(p); ++i) {
                levels[p].faces[i][s] = find_key(keys[p - 1], face(static_cast<int>(p), i, keys[p][s]));
            }
        }
    }
    return levels;
}

}  // namespace sscat::detail
