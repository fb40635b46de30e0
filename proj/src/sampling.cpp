#include "unimap/sampling.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace unimap {

namespace {

// Cumulative cycle-length weights; exact tables are kept for moderate n.
constexpr int kTableLimit = 12000;

std::shared_ptr<const std::vector<Count>> cumulative_weights(int n, bool marked) {
    static std::mutex mu;
    static std::map<std::pair<int, bool>, std::shared_ptr<const std::vector<Count>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{n, marked}];
    if (!slot) {
        std::vector<Count> w = cycle_length_weights(n, marked);
        for (int k = 1; k <= n; ++k) w[k] += w[k - 1];
        slot = std::make_shared<const std::vector<Count>>(std::move(w));
    }
    return slot;
}

Count total_weight(int n, bool marked) {
    static std::mutex mu;
    static std::map<std::pair<int, bool>, Count> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, marked});
    if (it != cache.end()) return it->second;
    const Count t = marked ? count_marked_total(n) : count_unicycles(n);
    cache[{n, marked}] = t;
    return t;
}

// Walks k = 1, 2, ... recomputing weights until the cumulative sum passes u.
int scan_cycle_length(int n, bool marked, const Count& u) {
    Count t_prev = 1, t_cur = 1;  // T(k-1), T(k)
    Count q;
    mpz_bin_uiui(q.get_mpz_t(), 2 * n, n - 1);
    Count p;
    mpz_ui_pow_ui(p.get_mpz_t(), 3, n - 1);
    q *= p;
    Count acc = 0;
    for (int k = 1; k <= n; ++k) {
        if (k >= 2) {
            Count t_next = ((2 * k - 1) * t_cur + 3 * (k - 1) * t_prev) / k;
            t_prev = std::move(t_cur);
            t_cur = std::move(t_next);
        }
        Count w = t_cur * q;
        if (marked)
            w = w * k / n;
        else
            w *= 2;
        acc += w;
        if (u < acc) return k;
        if (k < n) q = q * (n - k) / (3 * (n + k + 1));
    }
    throw std::logic_error("cycle length scan overran");
}

}  // namespace

int sample_cycle_length(int n, bool marked, RngStream& rng) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (n > kTableLimit) return scan_cycle_length(n, marked, rng.below(total_weight(n, marked)));
    const auto cum = cumulative_weights(n, marked);
    const Count u = rng.below(cum->back());
    return static_cast<int>(std::upper_bound(cum->begin() + 1, cum->end(), u) - cum->begin());
}

std::vector<int> sample_label_bridge(int k, RngStream& rng) {
    if (k < 1) throw std::invalid_argument("bridge length must be positive");
    // rows[r][y] = walks of length r from y to 0, for 0 <= y <= bound(r).
    auto bound = [k](int r) { return std::min(r, k - r + 2); };
    std::vector<std::vector<Count>> rows(k + 1);
    auto get = [&](int y, int r) -> Count {
        y = std::abs(y);
        if (y > r) return 0;
        return rows[r][y];
    };
    rows[0] = {1};
    for (int r = 1; r <= k; ++r) {
        rows[r].resize(std::max(0, bound(r)) + 1);
        for (int y = 0; y <= bound(r); ++y) rows[r][y] = get(y - 1, r - 1) + get(y, r - 1) + get(y + 1, r - 1);
    }
    std::vector<int> steps;
    steps.reserve(k);
    int x = 0;
    for (int r = k; r >= 1; --r) {
        Count u = rng.below(get(x, r));
        int chosen = 1;
        for (int s = -1; s <= 1; ++s) {
            const Count w = get(x + s, r - 1);
            if (u < w) {
                chosen = s;
                break;
            }
            u -= w;
        }
        steps.push_back(chosen);
        x += chosen;
    }
    return steps;
}

PlaneForest sample_plane_forest(int a, int b, RngStream& rng) {
    if (a < 1 || b < 0) throw std::invalid_argument("forest needs a >= 1, b >= 0");
    const int len = 2 * b + a;
    std::vector<signed char> w(len, -1);
    std::fill(w.begin(), w.begin() + b, 1);
    std::shuffle(w.begin(), w.end(), rng.engine());

    // Rotation s is a first passage to -a iff S_s is a strict minimum of S
    // over [0, s) and S_t > S_s - a for s < t < len.
    std::vector<int> s(len + 1, 0);
    for (int i = 0; i < len; ++i) s[i + 1] = s[i] + w[i];
    std::vector<int> suffix_min(len + 1);
    suffix_min[len] = s[len];
    for (int i = len - 1; i >= 0; --i) suffix_min[i] = std::min(s[i], suffix_min[i + 1]);
    std::vector<int> valid;
    int prefix_min = s[0];
    for (int st = 0; st < len; ++st) {
        bool ok;
        if (st == 0) {
            ok = len == 1 || *std::min_element(s.begin() + 1, s.begin() + len) > -a;
        } else {
            ok = prefix_min > s[st] && suffix_min[st + 1] > s[st] - a;
            prefix_min = std::min(prefix_min, s[st]);
        }
        if (ok) valid.push_back(st);
    }
    if (static_cast<int>(valid.size()) != a) throw std::logic_error("cycle lemma: wrong number of valid rotations");
    const int st = valid[rng.below(valid.size())];
    PlaneForest f;
    f.trees = a;
    f.edges = b;
    f.word.reserve(len);
    for (int i = 0; i < len; ++i) f.word.push_back(w[(st + i) % len]);
    return f;
}

MarkedUnicycle sample_marked_unicycle_given_length(int n, int k, RngStream& rng) {
    const std::vector<int> bridge = sample_label_bridge(k, rng);
    const PlaneForest forest = sample_plane_forest(2 * k, n - k, rng);

    // Edge i < k joins cycle vertex i to i+1; dart 2i points forward.
    std::vector<int> label_of_dart(2 * n);
    std::vector<int> cycle_label(k);
    for (int i = 1; i < k; ++i) cycle_label[i] = cycle_label[i - 1] + bridge[i - 1];
    for (int i = 0; i < k; ++i) {
        label_of_dart[2 * i] = cycle_label[i];
        label_of_dart[2 * i + 1] = cycle_label[(i + 1) % k];
    }
    // Per cycle vertex: children of its external tree and of its internal tree.
    std::vector<std::vector<Dart>> ext(k), in(k);
    std::vector<std::vector<Dart>> rotations(k);
    int next_edge = k;
    std::size_t pos = 0;
    for (int t = 0; t < 2 * k; ++t) {
        const int cv = t / 2;
        auto& root_slot = t % 2 == 0 ? ext[cv] : in[cv];
        std::vector<std::size_t> stack;  // rotation indices of open vertices
        std::vector<int> label_stack{cycle_label[cv]};
        while (true) {
            const signed char step = forest.word[pos++];
            if (step == 1) {
                const int e = next_edge++;
                const int lab = label_stack.back() + static_cast<int>(rng.below(3)) - 1;
                label_of_dart[2 * e] = label_stack.back();
                label_of_dart[2 * e + 1] = lab;
                if (stack.empty())
                    root_slot.push_back(2 * e);
                else
                    rotations[stack.back()].push_back(2 * e);
                rotations.push_back({2 * e + 1});
                stack.push_back(rotations.size() - 1);
                label_stack.push_back(lab);
            } else if (stack.empty()) {
                break;
            } else {
                stack.pop_back();
                label_stack.pop_back();
            }
        }
    }
    for (int i = 0; i < k; ++i) {
        auto& rot = rotations[i];
        rot.push_back(2 * i);
        rot.insert(rot.end(), in[i].begin(), in[i].end());
        rot.push_back(2 * ((i + k - 1) % k) + 1);
        rot.insert(rot.end(), ext[i].begin(), ext[i].end());
    }
    CombinatorialMap m = map_from_rotations(n, rotations, 0);
    std::vector<int> labels = labels_from_darts(m, label_of_dart);
    const Face internal = m.corner_face(0);
    return MarkedUnicycle::make(LabelledUnicycle::make(std::move(m), std::move(labels), internal));
}

MarkedUnicycle sample_marked_unicycle(int n, RngStream& rng) {
    return sample_marked_unicycle_given_length(n, sample_cycle_length(n, true, rng), rng);
}

LabelledUnicycle sample_unicycle(int n, RngStream& rng) {
    const int k = sample_cycle_length(n, false, rng);
    const MarkedUnicycle mu = sample_marked_unicycle_given_length(n, k, rng);
    const LabelledUnicycle& u = mu.unicycle;
    const Dart root = static_cast<Dart>(rng.below(2 * n));
    const int shift = u.labels[u.map.origin(root)];
    std::vector<int> labels = u.labels;
    for (int& l : labels) l -= shift;
    return LabelledUnicycle::make(u.map.rerooted(root), std::move(labels), u.internal_face);
}

DelayedSample sample_delayed_with_unicycle(int n, RngStream& rng) {
    LabelledUnicycle u = sample_unicycle(n, rng);
    DelayedQuadrangulation q = cvs_unicycle(u, rng.coin() ? 1 : 0);
    return {std::move(u), std::move(q)};
}

DelayedQuadrangulation sample_delayed_quadrangulation(int n, RngStream& rng) {
    return sample_delayed_with_unicycle(n, rng).quad;
}

}  // namespace unimap
