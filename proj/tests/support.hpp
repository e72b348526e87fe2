#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "toric/affine.hpp"
#include "toric/poset.hpp"
#include "toric/toric_arr.hpp"

namespace testsup {

inline std::string data_path(const std::string& name) {
    return std::string(TORICARR_DATA_DIR) + "/" + name;
}

// Random bounded graded poset: `width[r]` elements at each middle rank,
// random cover relations chosen so that every element has at least one
// cover above and below.  Strictly graded by construction.
inline toric::GradedPoset random_graded_poset(std::mt19937& rng, int max_rank = 4,
                                              int max_width = 4) {
    std::uniform_int_distribution<int> rank_d(2, max_rank);
    int height = rank_d(rng);
    std::vector<int> width(height + 1, 1);
    std::uniform_int_distribution<int> width_d(1, max_width);
    for (int r = 1; r < height; ++r) width[r] = width_d(rng);

    std::vector<int> ranks;
    std::vector<std::vector<int>> level(height + 1);
    for (int r = 0; r <= height; ++r)
        for (int i = 0; i < width[r]; ++i) {
            level[r].push_back(static_cast<int>(ranks.size()));
            ranks.push_back(r);
        }

    std::vector<std::pair<int, int>> covers;
    std::bernoulli_distribution edge_d(0.5);
    for (int r = 0; r < height; ++r) {
        std::vector<bool> hit_up(level[r].size(), false), hit_dn(level[r + 1].size(), false);
        for (size_t i = 0; i < level[r].size(); ++i)
            for (size_t j = 0; j < level[r + 1].size(); ++j)
                if (edge_d(rng)) {
                    covers.emplace_back(level[r][i], level[r + 1][j]);
                    hit_up[i] = hit_dn[j] = true;
                }
        for (size_t i = 0; i < level[r].size(); ++i)
            if (!hit_up[i]) {
                std::uniform_int_distribution<size_t> pick(0, level[r + 1].size() - 1);
                size_t j = pick(rng);
                covers.emplace_back(level[r][i], level[r + 1][j]);
                hit_dn[j] = true;
            }
        for (size_t j = 0; j < level[r + 1].size(); ++j)
            if (!hit_dn[j]) {
                std::uniform_int_distribution<size_t> pick(0, level[r].size() - 1);
                covers.emplace_back(level[r][pick(rng)], level[r + 1][j]);
            }
    }
    std::sort(covers.begin(), covers.end());
    covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
    return toric::GradedPoset(std::move(ranks), std::move(covers));
}

// Random essential affine arrangement in R^n with m hyperplanes, small
// integer data.  Retries until essential and duplicate-free.
inline toric::AffineArrangement random_affine(std::mt19937& rng, int n, int m,
                                              bool central = false) {
    m = std::max(m, n);  // fewer than n hyperplanes can never be essential
    std::uniform_int_distribution<int> coef(-2, 2);
    for (;;) {
        std::string text = "affine " + std::to_string(n) + "\n";
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < n; ++j) text += std::to_string(coef(rng)) + " ";
            text += "| " + std::to_string(central ? 0 : coef(rng)) + "\n";
        }
        try {
            auto a = toric::AffineArrangement::parse(text);
            a.require_essential();
            return a;
        } catch (const std::exception&) {
            continue;
        }
    }
}

// Random essential toric arrangement on T^n with m hyperplanes.
inline toric::ToricArrangement random_toric(std::mt19937& rng, int n, int m) {
    m = std::max(m, n);
    std::uniform_int_distribution<int> coef(-2, 2);
    std::uniform_int_distribution<int> den(1, 4);
    for (;;) {
        std::string text = "toric " + std::to_string(n) + "\n";
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < n; ++j) text += std::to_string(coef(rng)) + " ";
            int d = den(rng);
            std::uniform_int_distribution<int> num(0, d - 1);
            text += "| " + std::to_string(num(rng)) + "/" + std::to_string(d) + "\n";
        }
        try {
            auto a = toric::ToricArrangement::parse(text);
            a.require_essential();
            return a;
        } catch (const std::exception&) {
            continue;
        }
    }
}

}  // namespace testsup
