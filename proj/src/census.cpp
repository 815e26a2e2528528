#include "belyi/census.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace belyi {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 0 || v >= degree() || seen[v])
            throw std::invalid_argument("Permutation: image list is not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int d) {
    std::vector<int> im(d);
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
}

Permutation Permutation::compose_after(const Permutation& other) const {
    std::vector<int> im(images_.size());
    for (int i = 0; i < degree(); ++i) im[i] = images_[other(i)];
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (int i = 0; i < degree(); ++i) im[images_[i]] = i;
    return Permutation(std::move(im));
}

Permutation Permutation::conjugate_by(const Permutation& t) const {
    std::vector<int> im(images_.size());
    for (int i = 0; i < degree(); ++i) im[t(i)] = t(images_[i]);
    return Permutation(std::move(im));
}

int Permutation::cycle_count() const {
    int count = 0;
    std::vector<bool> seen(images_.size(), false);
    for (int i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        ++count;
        for (int j = i; !seen[j]; j = images_[j]) seen[j] = true;
    }
    return count;
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<int> lens;
    std::vector<bool> seen(images_.size(), false);
    for (int i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = images_[j]) {
            seen[j] = true;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return lens;
}

Permutation PermPair::sigma_inf() const {
    return sigma1.compose_after(sigma0).inverse();
}

bool PermPair::is_transitive() const {
    const int d = sigma0.degree();
    std::vector<bool> seen(d, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int visited = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : {sigma0(v), sigma1(v)}) {
            if (!seen[w]) {
                seen[w] = true;
                ++visited;
                stack.push_back(w);
            }
        }
    }
    return visited == d;
}

namespace {

std::vector<Permutation> symmetric_group(int d) {
    std::vector<int> im(d);
    std::iota(im.begin(), im.end(), 0);
    std::vector<Permutation> out;
    do {
        out.emplace_back(im);
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

std::vector<std::vector<int>> partitions(int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // descending partitions
    auto rec = [&](auto&& self, int rest, int max_part) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, d, d);
    return out;
}

Permutation from_cycle_type(const std::vector<int>& type) {
    std::vector<int> im;
    int base = 0;
    for (int len : type) {
        for (int i = 0; i < len; ++i) im.push_back(base + (i + 1) % len);
        base += len;
    }
    return Permutation(std::move(im));
}

}  // namespace

PermPair canonical_form(const PermPair& pair) {
    const int d = pair.sigma0.degree();
    PermPair best = pair;
    for (const auto& t : symmetric_group(d)) {
        PermPair cand{pair.sigma0.conjugate_by(t), pair.sigma1.conjugate_by(t)};
        if (cand < best) best = std::move(cand);
    }
    return best;
}

Passport passport_of(const PermPair& pair) {
    return Passport{{pair.sigma0.cycle_type(), pair.sigma1.cycle_type(),
                     pair.sigma_inf().cycle_type()}};
}

Integer hall_count(int d) {
    if (d < 1) throw std::invalid_argument("hall_count: d must be positive");
    std::vector<Integer> m(d + 1), fact(d + 1);
    fact[0] = 1;
    for (int i = 1; i <= d; ++i) fact[i] = fact[i - 1] * i;
    for (int k = 1; k <= d; ++k) {
        Integer acc = k * fact[k];
        for (int i = 1; i < k; ++i) acc -= fact[k - i] * m[i];
        m[k] = acc;
    }
    return m[d];
}

Integer count_transitive_pairs(int d, int limit) {
    if (d < 1) throw std::invalid_argument("count_transitive_pairs: d must be positive");
    if (d > limit)
        throw BruteForceLimitExceeded("count_transitive_pairs: d = " + std::to_string(d) +
                                      " exceeds brute-force limit " + std::to_string(limit));
    auto perms = symmetric_group(d);
    Integer count(0);
    for (const auto& s0 : perms)
        for (const auto& s1 : perms)
            if (PermPair{s0, s1}.is_transitive()) ++count;
    return count;
}

std::vector<DessinClass> enumerate_dessins(int d, int limit) {
    if (d < 1) throw std::invalid_argument("enumerate_dessins: d must be positive");
    if (d > limit)
        throw BruteForceLimitExceeded("enumerate_dessins: d = " + std::to_string(d) +
                                      " exceeds brute-force limit " + std::to_string(limit));
    auto perms = symmetric_group(d);
    std::set<PermPair> reps;
    // every class meets sigma0 = standard representative of its cycle type
    for (const auto& type : partitions(d)) {
        Permutation s0 = from_cycle_type(type);
        for (const auto& s1 : perms) {
            PermPair pair{s0, s1};
            if (!pair.is_transitive()) continue;
            reps.insert(canonical_form(pair));
        }
    }
    std::vector<DessinClass> out;
    for (const auto& rep : reps) {
        Integer aut(0);
        for (const auto& t : perms)
            if (rep.sigma0.conjugate_by(t) == rep.sigma0 &&
                rep.sigma1.conjugate_by(t) == rep.sigma1)
                ++aut;
        out.push_back({rep, passport_of(rep), genus_of(rep), aut});
    }
    return out;
}

int genus_of(const PermPair& pair) {
    if (!pair.is_transitive())
        throw std::invalid_argument("genus_of: permutation pair is not transitive");
    const int d = pair.sigma0.degree();
    int branching = (d - pair.sigma0.cycle_count()) + (d - pair.sigma1.cycle_count()) +
                    (d - pair.sigma_inf().cycle_count());
    if (branching % 2 != 0) throw std::logic_error("genus_of: odd total branching");
    int g = 1 - d + branching / 2;
    if (g < 0) throw std::logic_error("genus_of: negative genus");
    return g;
}

Integer degree_bound(int d, const Integer& a) {
    if (d < 1 || a < 1) throw std::invalid_argument("degree_bound: d and a must be positive");
    if (Integer(d) % a != 0) throw std::invalid_argument("degree_bound: a must divide d");
    return Integer(d) / a * hall_count(d);
}

Integer passport_bound(int d, const Passport& passport, int limit) {
    Integer count(0);
    for (const auto& cls : enumerate_dessins(d, limit))
        if (cls.passport == passport) ++count;
    return count;
}

}  // namespace belyi
