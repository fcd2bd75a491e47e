#include "qsdd/basis.hpp"

#include <json.hpp>

namespace qsdd {

XPoly Expansion::reconstruct() const {
    XPoly f;
    for (auto& [c, a] : terms_)
        f += forest_polynomial(IndexedForest::from_code(c, m_)) * a;
    return f;
}

std::string Expansion::to_text() const {
    if (terms_.empty()) return "";
    std::string out;
    for (auto& [c, a] : terms_) {
        std::string cs = code_to_string(c);
        cs.front() = '(';
        cs.back() = ')';
        out += cs + ": " + a.str() + "\n";
    }
    return out;
}

std::string Expansion::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (auto& [c, a] : terms_) terms.push_back({{"code", c}, {"coeff", a.str()}});
    return nlohmann::json{{"m", m_.value()}, {"terms", terms}}.dump();
}

const XPoly& ForestPolyTable::get(const Code& c) {
    auto it = cache_.find(c);
    if (it == cache_.end())
        it = cache_.emplace(c, forest_polynomial(IndexedForest::from_code(c, m_))).first;
    return it->second;
}

XPoly forest_polynomial(const IndexedForest& F) {
    ForestShape shape = analyze(F);
    const int m = shape.m;
    const int k = (int)shape.nodes.size();
    XPoly result;
    std::vector<int> kappa(k, 0);

    // Nodes come in prefix order, so each node's parent is already
    // assigned; kappa(v) ranges over values <= flag(v) congruent to
    // flag(v) mod m and at least kappa(parent) + slot.
    auto dfs = [&](auto&& self, int v) -> void {
        if (v == k) {
            Code c;
            for (int x : kappa) code_set(c, x, code_at(c, x) + 1);
            result.add_term(std::move(c), Int(1));
            return;
        }
        const auto& node = shape.nodes[v];
        int lb = 1;
        if (node.parent >= 0) lb = std::max(lb, kappa[node.parent] + node.slot);
        for (int x = node.flag; x >= lb; x -= m) {
            kappa[v] = x;
            self(self, v + 1);
        }
    };
    dfs(dfs, 0);
    return result;
}

XPoly trim_composite(const XPoly& f, const IndexedForest& F) {
    TrimWord w = canonical_word(F);
    XPoly g = f;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (g.is_zero()) break;
        g = trim(g, *it, F.m());
    }
    return g;
}

Expansion forest_expand(const XPoly& f, MParam m, ForestPolyTable* table) {
    Expansion e(m);
    ForestPolyTable local(m);
    if (!table) table = &local;
    XPoly g = f;
    while (!g.is_zero()) {
        auto [c, a] = g.leading_term();
        e.add(c, a);
        g -= table->get(c) * a;
    }
    return e;
}

Expansion forest_expand_by_trims(const XPoly& f, MParam m) {
    Expansion e(m);
    if (f.is_zero()) return e;
    int n = f.max_variable();
    long d = f.degree();
    // Candidates: forests with flags on [n] and size at most deg f,
    // i.e. all codes supported on [n] of weight <= deg f.
    Code cur(n, 0);
    auto gen = [&](auto&& self, int pos, long remaining) -> void {
        if (pos > n) {
            Code c = canonical(cur);
            e.add(c, trim_composite(f, IndexedForest::from_code(c, m)).constant_term());
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            cur[pos - 1] = v;
            self(self, pos + 1, remaining - v);
        }
        cur[pos - 1] = 0;
    };
    gen(gen, 1, d);
    return e;
}

QSeq::QSeq(std::vector<int> entries, int n, MParam m)
    : entries_(std::move(entries)), n_(n), m_(m) {
    if (n < 1) throw std::invalid_argument("QSeq needs n >= 1");
    if (entries_.empty()) return;
    if (entries_.front() > n || entries_.front() < n - m.value() + 1)
        throw std::invalid_argument("QSeq needs n >= a_1 >= n-m+1");
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] < 1) throw std::invalid_argument("QSeq entries must be >= 1");
        if (i + 1 < entries_.size()) {
            int gap = entries_[i] - entries_[i + 1];
            if (gap < 0) throw std::invalid_argument("QSeq must be weakly decreasing");
            if (gap > m.value()) throw std::invalid_argument("QSeq gaps must be at most m");
        }
    }
}

XPoly slide_polynomial(const std::vector<int>& a, MParam m) {
    for (int e : a)
        if (e < 1) throw std::invalid_argument("slide entries must be >= 1");
    const int k = (int)a.size();
    XPoly result;
    std::vector<int> pick(k, 0);
    auto dfs = [&](auto&& self, int j) -> void {
        if (j == k) {
            Code c;
            for (int x : pick) code_set(c, x, code_at(c, x) + 1);
            result.add_term(std::move(c), Int(1));
            return;
        }
        int hi = a[j];
        if (j > 0) hi = std::min(hi, pick[j - 1] - (a[j - 1] > a[j] ? 1 : 0));
        // largest candidate <= hi congruent to a_j mod m
        int start = hi - ((hi - a[j]) % m.value() + m.value()) % m.value();
        for (int x = start; x >= 1; x -= m.value()) {
            pick[j] = x;
            self(self, j + 1);
        }
    };
    dfs(dfs, 0);
    return result;
}

std::vector<std::vector<int>> enumerate_qseq(int n, MParam m, int length) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto dfs = [&](auto&& self) -> void {
        if ((int)cur.size() == length) {
            out.push_back(cur);
            return;
        }
        int hi = cur.empty() ? n : cur.back();
        int lo = cur.empty() ? n - m.value() + 1 : cur.back() - m.value();
        for (int x = hi; x >= std::max(1, lo); --x) {
            cur.push_back(x);
            self(self);
            cur.pop_back();
        }
    };
    dfs(dfs);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

IndexedForest qseq_zigzag(const QSeq& a) {
    IndexedForest F(a.m());
    for (auto it = a.entries().rbegin(); it != a.entries().rend(); ++it) F = blossom(F, *it);
    if (!is_zigzag(F, a.n()))
        throw std::logic_error("qseq_zigzag produced a non-zigzag forest");
    return F;
}

QSeq zigzag_qseq(const IndexedForest& Z, int n) {
    if (!is_zigzag(Z, n))
        throw std::invalid_argument("zigzag_qseq needs a forest in Zigzag_n");
    std::vector<int> a;
    const Code& c = Z.code();
    for (int i = (int)c.size(); i >= 1; --i)
        for (int rep = 0; rep < code_at(c, i); ++rep) a.push_back(i);
    return QSeq(std::move(a), n, Z.m());
}

FundamentalExpansion fundamental_expand(const XPoly& f, int n, MParam m) {
    if (!is_quasisymmetric(f, n, m))
        throw std::invalid_argument("fundamental_expand needs quasisymmetric input");
    FundamentalExpansion out;
    long dmax = f.degree();
    for (long d = 0; d <= dmax; ++d) {
        XPoly fd = f.homogeneous_component(d);
        if (fd.is_zero()) continue;
        if (d == 0) {
            out[{}] = fd.constant_term();
            continue;
        }
        // Walk the tree of trimmings T_{a_1}, then T_{a_2}, ...; the
        // coefficient of (a_1,...,a_d) is the resulting constant.
        std::vector<int> seq;
        auto dfs = [&](auto&& self, const XPoly& g) -> void {
            if ((long)seq.size() == d) {
                Int c = g.constant_term();
                if (c != 0) out[seq] = c;
                return;
            }
            int hi = seq.empty() ? n : seq.back();
            int lo = seq.empty() ? n - m.value() + 1 : seq.back() - m.value();
            for (int x = hi; x >= std::max(1, lo); --x) {
                XPoly h = trim(g, x, m);
                if (h.is_zero()) continue;
                seq.push_back(x);
                self(self, h);
                seq.pop_back();
            }
        };
        dfs(dfs, fd);
    }
    return out;
}

Code path_lengths(const ForestShape& shape, unsigned long mask) {
    // Paths live in the binarized forest: slot 0 is the left child,
    // slot m the right child; middle edges are never used.
    const int k = (int)shape.nodes.size();
    std::vector<char> chosen(k, 0);
    for (int v = 0; v < k; ++v) {
        int slot = (mask >> v & 1) ? shape.m : 0;
        int u = shape.nodes[v].child_node[slot];
        if (u >= 0) chosen[u] = 1;
    }
    Code d;
    for (int v = 0; v < k; ++v) {
        if (chosen[v]) continue;  // not the top of a path
        int len = 0, cur = v, leaf = -1;
        while (true) {
            ++len;
            int slot = (mask >> cur & 1) ? shape.m : 0;
            int u = shape.nodes[cur].child_node[slot];
            if (u < 0) {
                leaf = shape.nodes[cur].child_leaf[slot];
                break;
            }
            cur = u;
        }
        code_set(d, leaf, len);
    }
    canonicalize(d);
    return d;
}

int epsilon_sign(const IndexedForest& F, const Code& c) {
    ForestShape shape = analyze(F);
    const int k = (int)shape.nodes.size();
    Code target = canonical(c);
    if (code_weight(target) != k) return 0;
    if (k > 30) throw std::invalid_argument("epsilon_sign: forest too large");
    for (unsigned long mask = 0; mask < (1ul << k); ++mask)
        if (path_lengths(shape, mask) == target)
            return __builtin_popcountll(mask) % 2 == 0 ? 1 : -1;
    return 0;
}

Expansion monomial_to_forest(const Code& c, MParam m) {
    Expansion e(m);
    Code cc = canonical(c);
    long w = code_weight(cc);
    if (w == 0) {
        e.add(Code{}, Int(1));
        return e;
    }
    int n = code_max_support(cc);
    Code cur(n, 0);
    auto gen = [&](auto&& self, int pos, long remaining) -> void {
        if (pos > n) {
            if (remaining != 0) return;
            Code g = canonical(cur);
            e.add(g, Int(epsilon_sign(IndexedForest::from_code(g, m), cc)));
            return;
        }
        for (int v = 0; v <= remaining; ++v) {
            cur[pos - 1] = v;
            self(self, pos + 1, remaining - v);
        }
        cur[pos - 1] = 0;
    };
    gen(gen, 1, w);
    return e;
}

} // namespace qsdd
