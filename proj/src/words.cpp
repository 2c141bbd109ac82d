#include "perron/words.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace perron {

Word Word::from_digits(const std::string& digits) {
    std::vector<Symbol> syms;
    syms.reserve(digits.size());
    for (char c : digits) {
        if (c < '0' || c > '9')
            throw_invalid("ParseError", "word digit string contains non-digit: " + digits);
        syms.push_back(c - '0');
    }
    return Word(std::move(syms));
}

Word Word::prefix(int n) const {
    return Word(std::vector<Symbol>(syms_.begin(), syms_.begin() + n));
}

Word Word::suffix(int n) const {
    return Word(std::vector<Symbol>(syms_.end() - n, syms_.end()));
}

Word Word::drop_first() const {
    return Word(std::vector<Symbol>(syms_.begin() + 1, syms_.end()));
}

Word Word::reversed() const {
    return Word(std::vector<Symbol>(syms_.rbegin(), syms_.rend()));
}

Word Word::append(Symbol s) const {
    std::vector<Symbol> v = syms_;
    v.push_back(s);
    return Word(std::move(v));
}

Word Word::concat(const Word& other) const {
    std::vector<Symbol> v = syms_;
    v.insert(v.end(), other.syms_.begin(), other.syms_.end());
    return Word(std::move(v));
}

bool Word::starts_with(const Word& w) const {
    if (w.size() > size()) return false;
    return std::equal(w.syms_.begin(), w.syms_.end(), syms_.begin());
}

bool Word::ends_with(const Word& w) const {
    if (w.size() > size()) return false;
    return std::equal(w.syms_.rbegin(), w.syms_.rend(), syms_.rbegin());
}

bool Word::contains_factor(const Word& w) const {
    if (w.empty()) return true;
    if (w.size() > size()) return false;
    return std::search(syms_.begin(), syms_.end(), w.syms_.begin(), w.syms_.end()) != syms_.end();
}

std::string Word::str() const {
    bool digits = std::all_of(syms_.begin(), syms_.end(), [](Symbol s) { return s >= 0 && s <= 9; });
    std::ostringstream os;
    if (digits) {
        for (Symbol s : syms_) os << s;
    } else {
        os << '[';
        for (size_t i = 0; i < syms_.size(); ++i) {
            if (i) os << ',';
            os << syms_[i];
        }
        os << ']';
    }
    return os.str();
}

ShiftSpec validate_spec(int q, std::vector<Word> forbidden) {
    if (q < 2) throw_invalid("EmptyAlphabet", "alphabet size must be at least 2, got " + std::to_string(q));
    for (const Word& w : forbidden) {
        for (int i = 0; i < w.size(); ++i)
            if (w[i] < 0 || w[i] >= q)
                throw_invalid("SymbolOutOfRange", "symbol " + std::to_string(w[i]) + " in \"" +
                                                      w.str() + "\" out of range for q=" + std::to_string(q));
        if (w.size() <= 1)
            throw_invalid("LengthOneForbiddenWord",
                          "forbidden words must have length >= 2, got \"" + w.str() + "\"");
    }
    for (size_t i = 0; i < forbidden.size(); ++i)
        for (size_t j = 0; j < forbidden.size(); ++j) {
            if (i == j) continue;
            if (forbidden[i] == forbidden[j])
                throw_invalid("NotReduced", "duplicate forbidden word \"" + forbidden[i].str() + "\"");
            if (forbidden[j].contains_factor(forbidden[i]))
                throw_invalid("NotReduced", "\"" + forbidden[i].str() + "\" is a factor of \"" +
                                                forbidden[j].str() + "\"");
        }
    ShiftSpec spec;
    spec.q = q;
    spec.forbidden = std::move(forbidden);
    spec.p = 2;
    for (const Word& w : spec.forbidden) spec.p = std::max(spec.p, w.size());
    return spec;
}

bool contains_forbidden(const ShiftSpec& spec, const Word& w) {
    for (const Word& a : spec.forbidden)
        if (w.contains_factor(a)) return true;
    return false;
}

namespace {

// True iff appending the last symbol of w created a forbidden occurrence,
// i.e. some forbidden word is a suffix of w.  Assumes w minus its last
// symbol is already clean, so this is the only place an occurrence can end.
bool forbidden_suffix(const ShiftSpec& spec, const std::vector<Symbol>& w) {
    for (const Word& a : spec.forbidden) {
        int m = a.size();
        if (m > static_cast<int>(w.size())) continue;
        bool match = true;
        for (int i = 0; i < m; ++i)
            if (w[w.size() - m + i] != a[i]) { match = false; break; }
        if (match) return true;
    }
    return false;
}

void enumerate_rec(const ShiftSpec& spec, int n, std::vector<Symbol>& cur, std::vector<Word>& out) {
    if (static_cast<int>(cur.size()) == n) {
        out.emplace_back(cur);
        return;
    }
    for (Symbol b = 0; b < spec.q; ++b) {
        cur.push_back(b);
        if (!forbidden_suffix(spec, cur)) enumerate_rec(spec, n, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Word> enumerate_allowed_words(const ShiftSpec& spec, int n) {
    std::vector<Word> out;
    std::vector<Symbol> cur;
    cur.reserve(static_cast<size_t>(std::max(n, 0)));
    enumerate_rec(spec, n, cur, out);
    return out;
}

int AdjacencyMatrix::index_of(const Word& w) const {
    auto it = std::lower_bound(labels.begin(), labels.end(), w);
    if (it == labels.end() || !(*it == w)) return -1;
    return static_cast<int>(it - labels.begin());
}

AdjacencyMatrix build_adjacency(const ShiftSpec& spec) {
    AdjacencyMatrix adj;
    adj.labels = enumerate_allowed_words(spec, spec.p - 1);
    const int L = adj.size();
    if (L == 0) throw_assumption("EmptyShift", "no allowed word of length p-1; the shift is empty");
    adj.entries.assign(static_cast<size_t>(L), std::vector<int>(static_cast<size_t>(L), 0));
    for (int i = 0; i < L; ++i) {
        const Word& x = adj.labels[static_cast<size_t>(i)];
        for (int j = 0; j < L; ++j) {
            const Word& y = adj.labels[static_cast<size_t>(j)];
            // progressive overlap: drop first of x == drop last of y
            bool overlap = true;
            for (int k = 0; k + 1 < spec.p - 1; ++k)
                if (x[k + 1] != y[k]) { overlap = false; break; }
            if (!overlap) continue;
            // x and y are allowed, so only factors ending at the last
            // symbol of x . last(y) need checking.
            std::vector<Symbol> ext = x.symbols();
            ext.push_back(y[y.size() - 1]);
            if (!forbidden_suffix(spec, ext)) adj.entries[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1;
        }
    }
    return adj;
}

namespace {

// Strongly connected components, Kosaraju.
std::vector<int> scc_ids(const std::vector<std::vector<int>>& a) {
    const int n = static_cast<int>(a.size());
    std::vector<int> order;
    order.reserve(static_cast<size_t>(n));
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int start = 0; start < n; ++start) {
        if (seen[static_cast<size_t>(start)]) continue;
        // iterative post-order DFS
        std::vector<std::pair<int, int>> stack{{start, 0}};
        seen[static_cast<size_t>(start)] = 1;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            bool advanced = false;
            for (int w = next; w < n; ++w) {
                if (a[static_cast<size_t>(v)][static_cast<size_t>(w)] && !seen[static_cast<size_t>(w)]) {
                    next = w + 1;
                    seen[static_cast<size_t>(w)] = 1;
                    stack.emplace_back(w, 0);
                    advanced = true;
                    break;
                }
            }
            if (!advanced) {
                order.push_back(v);
                stack.pop_back();
            }
        }
    }
    std::vector<int> comp(static_cast<size_t>(n), -1);
    int ncomp = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        if (comp[static_cast<size_t>(*it)] >= 0) continue;
        std::vector<int> stack{*it};
        comp[static_cast<size_t>(*it)] = ncomp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w)
                if (a[static_cast<size_t>(w)][static_cast<size_t>(v)] && comp[static_cast<size_t>(w)] < 0) {
                    comp[static_cast<size_t>(w)] = ncomp;
                    stack.push_back(w);
                }
        }
        ++ncomp;
    }
    return comp;
}

// Period of a strongly connected set of vertices: gcd over internal edges
// (u, v) of level[u] + 1 - level[v], levels from a BFS inside the set.
int scc_period(const std::vector<std::vector<int>>& a, const std::vector<int>& verts) {
    const int n = static_cast<int>(a.size());
    std::vector<int> level(static_cast<size_t>(n), -1);
    std::vector<char> inset(static_cast<size_t>(n), 0);
    for (int v : verts) inset[static_cast<size_t>(v)] = 1;
    std::queue<int> bfs;
    bfs.push(verts[0]);
    level[static_cast<size_t>(verts[0])] = 0;
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        for (int w = 0; w < n; ++w)
            if (a[static_cast<size_t>(v)][static_cast<size_t>(w)] && inset[static_cast<size_t>(w)] &&
                level[static_cast<size_t>(w)] < 0) {
                level[static_cast<size_t>(w)] = level[static_cast<size_t>(v)] + 1;
                bfs.push(w);
            }
    }
    long long g = 0;
    for (int u : verts)
        for (int v : verts)
            if (a[static_cast<size_t>(u)][static_cast<size_t>(v)])
                g = std::gcd(g, static_cast<long long>(level[static_cast<size_t>(u)] + 1 -
                                                       level[static_cast<size_t>(v)]));
    return g == 0 ? 0 : static_cast<int>(g < 0 ? -g : g);
}

}  // namespace

GraphAnalysis analyze_graph(const std::vector<std::vector<int>>& entries) {
    GraphAnalysis res;
    const int n = static_cast<int>(entries.size());
    if (n == 0) return res;
    std::vector<int> comp = scc_ids(entries);
    int ncomp = *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<std::vector<int>> groups(static_cast<size_t>(ncomp));
    for (int v = 0; v < n; ++v) groups[static_cast<size_t>(comp[static_cast<size_t>(v)])].push_back(v);

    bool single = (ncomp == 1);
    bool has_edge_or_multi = (n > 1) || entries[0][0] == 1;  // a lone vertex needs a self-loop
    res.irreducible = single && has_edge_or_multi;

    // gcd of the periods of all components that contain a cycle; 1 when acyclic
    long long g = 0;
    for (const auto& verts : groups) {
        int pd = scc_period(entries, verts);
        if (pd > 0) g = std::gcd(g, static_cast<long long>(pd));
    }
    res.period = g == 0 ? 1 : static_cast<int>(g);
    res.primitive = res.irreducible && res.period == 1;
    return res;
}

GraphAnalysis analyze_graph(const AdjacencyMatrix& adj) { return analyze_graph(adj.entries); }

}  // namespace perron
