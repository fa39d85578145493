/**************************************************************************
 * arcs.hpp
 *
 * Copyright 2026 The grscount Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "grscount/geom.hpp"
#include "grscount/parallel.hpp"

namespace grscount {

/// Bitset over the points of a ProjectiveSpace.
class PointSet {
   public:
    explicit PointSet(std::size_t n = 0) : n_(n), words_((n + 63) / 64, 0) {}

    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    std::size_t size() const noexcept { return n_; }

    /// Number of clear bits at positions >= from.
    std::size_t count_clear(std::size_t from = 0) const noexcept;
    /// First clear bit at position >= from, or size().
    std::size_t next_clear(std::size_t from) const noexcept;

   private:
    std::size_t n_;
    std::vector<std::uint64_t> words_;
};

/**
 * Incremental bookkeeping for point sets in general position (no k on a
 * hyperplane) in PG(k-1, q). The forbidden set of an arc is the union of
 * all hyperplanes spanned by k-1 of its points; a point may be added iff it
 * is not forbidden.
 */
class ArcExtender {
   public:
    explicit ArcExtender(const ProjectiveSpace& space) : space_(space) {}

    const ProjectiveSpace& space() const noexcept { return space_; }

    /// Forbidden set after adding `a` to `chosen` (whose forbidden set is
    /// `base`). Returns false when `a` is in the span of k-2 or fewer chosen
    /// points, i.e. the extension is not in general position.
    bool extend(const PointSet& base, std::span<const std::size_t> chosen, std::size_t a,
                PointSet& out) const;

    /// Forbidden set of `points`; throws Errc::NotGeneralPosition when they
    /// are not in general position.
    PointSet forbidden_by(std::span<const std::size_t> points) const;

   private:
    const ProjectiveSpace& space_;
};

/// Indices of e_1, ..., e_k in the space.
std::vector<std::size_t> unit_points(const ProjectiveSpace& space);

/**
 * Depth-first enumeration of ordered sequences of `length` further points
 * extending `initial` to a set in general position. The first extension
 * point is dealt round-robin to workers; `leaf(worker, chosen)` is called
 * with the full point list (initial points first). When `leaf` is empty the
 * last level is counted without visiting. Returns per-worker leaf counts.
 */
template <class Leaf>
std::vector<std::uint64_t> enumerate_arc_sequences(const ProjectiveSpace& space,
                                                   std::span<const std::size_t> initial,
                                                   std::size_t length, unsigned workers,
                                                   Budget& budget, Leaf&& leaf,
                                                   bool visit_leaves = true) {
    if (workers == 0) workers = 1;
    ArcExtender ext(space);
    const PointSet root = ext.forbidden_by(initial);
    std::vector<std::uint64_t> counts(workers, 0);

    run_workers(workers, [&](unsigned w) {
        std::vector<std::size_t> chosen(initial.begin(), initial.end());
        std::vector<PointSet> stack(length + 1, PointSet(space.size()));
        stack[0] = root;
        std::uint64_t local = 0;
        std::uint64_t pending = 0;

        auto charge = [&](std::uint64_t n) {
            pending += n;
            if (pending >= 4096) {
                budget.charge(pending);
                pending = 0;
            }
        };

        auto rec = [&](auto&& self, std::size_t depth) -> void {
            const PointSet& cur = stack[depth];
            const std::size_t left = length - depth;
            if (left == 0) {
                ++local;
                if (visit_leaves) leaf(w, std::span<const std::size_t>(chosen));
                return;
            }
            if (left == 1 && !visit_leaves) {
                const auto c = cur.count_clear();
                local += c;
                charge(c);
                return;
            }
            for (std::size_t a = cur.next_clear(0); a < space.size(); a = cur.next_clear(a + 1)) {
                charge(1);
                if (!ext.extend(cur, chosen, a, stack[depth + 1])) continue;
                chosen.push_back(a);
                self(self, depth + 1);
                chosen.pop_back();
            }
        };

        if (length == 0) {
            if (w == 0) rec(rec, 0);
        } else {
            std::size_t ordinal = 0;
            for (std::size_t a = root.next_clear(0); a < space.size(); a = root.next_clear(a + 1), ++ordinal) {
                if (ordinal % workers != w) continue;
                charge(1);
                if (!ext.extend(root, chosen, a, stack[1])) continue;
                chosen.push_back(a);
                rec(rec, 1);
                chosen.pop_back();
            }
        }
        budget.charge(pending);
        counts[w] = local;
    });
    return counts;
}

/**
 * Same as enumerate_arc_sequences but for unordered sets: extension points
 * are added in increasing index order (initial points are unconstrained).
 * `leaf(worker, chosen, forbidden)` also receives the final forbidden set.
 */
template <class Leaf>
std::vector<std::uint64_t> enumerate_arc_sets(const ProjectiveSpace& space,
                                              std::span<const std::size_t> initial,
                                              std::size_t length, unsigned workers, Budget& budget,
                                              Leaf&& leaf) {
    if (workers == 0) workers = 1;
    ArcExtender ext(space);
    const PointSet root = ext.forbidden_by(initial);
    std::vector<std::uint64_t> counts(workers, 0);

    run_workers(workers, [&](unsigned w) {
        std::vector<std::size_t> chosen(initial.begin(), initial.end());
        std::vector<PointSet> stack(length + 1, PointSet(space.size()));
        stack[0] = root;
        std::uint64_t local = 0;
        std::uint64_t pending = 0;

        auto rec = [&](auto&& self, std::size_t depth, std::size_t from) -> void {
            const PointSet& cur = stack[depth];
            if (depth == length) {
                ++local;
                leaf(w, std::span<const std::size_t>(chosen), cur);
                return;
            }
            for (std::size_t a = cur.next_clear(from); a < space.size(); a = cur.next_clear(a + 1)) {
                if (++pending >= 4096) {
                    budget.charge(pending);
                    pending = 0;
                }
                if (!ext.extend(cur, chosen, a, stack[depth + 1])) continue;
                chosen.push_back(a);
                self(self, depth + 1, a + 1);
                chosen.pop_back();
            }
        };

        if (length == 0) {
            if (w == 0) rec(rec, 0, 0);
        } else {
            std::size_t ordinal = 0;
            for (std::size_t a = root.next_clear(0); a < space.size(); a = root.next_clear(a + 1), ++ordinal) {
                if (ordinal % workers != w) continue;
                ++pending;
                if (!ext.extend(root, chosen, a, stack[1])) continue;
                chosen.push_back(a);
                rec(rec, 1, a + 1);
                chosen.pop_back();
            }
        }
        budget.charge(pending);
        counts[w] = local;
    });
    return counts;
}

}  // namespace grscount
