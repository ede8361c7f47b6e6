#include "degpow/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <stdexcept>

namespace degpow {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

Graph::Graph(int n) : n_(n), rows_(static_cast<size_t>(n), 0) {
    if (n < 0 || n > kMaxVertices) fail("graph order must be in [0, 64], got " + std::to_string(n));
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) fail("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
}

int Graph::edge_count() const {
    int twice = 0;
    for (std::uint64_t row : rows_) twice += std::popcount(row);
    return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (rows_[static_cast<size_t>(u)] & bit(v)) != 0;
}

int Graph::degree(int v) const {
    check_vertex(v);
    return std::popcount(rows_[static_cast<size_t>(v)]);
}

DegreeSequence Graph::degree_sequence() const {
    DegreeSequence d(static_cast<size_t>(n_));
    for (int v = 0; v < n_; ++v) d[static_cast<size_t>(v)] = std::popcount(rows_[static_cast<size_t>(v)]);
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        std::uint64_t higher = rows_[static_cast<size_t>(u)] >> (u + 1) << (u + 1);
        while (higher) {
            int v = std::countr_zero(higher);
            out.emplace_back(u, v);
            higher &= higher - 1;
        }
    }
    return out;
}

Graph Graph::with_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) fail("loop " + std::to_string(u) + "-" + std::to_string(v) + " not allowed");
    Graph g = *this;
    g.rows_[static_cast<size_t>(u)] |= bit(v);
    g.rows_[static_cast<size_t>(v)] |= bit(u);
    return g;
}

Graph Graph::without_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    Graph g = *this;
    g.rows_[static_cast<size_t>(u)] &= ~bit(v);
    g.rows_[static_cast<size_t>(v)] &= ~bit(u);
    return g;
}

Graph Graph::with_vertex(std::uint64_t neighborhood) const {
    if (n_ >= kMaxVertices) fail("cannot extend past 64 vertices");
    if (neighborhood >> n_) fail("neighborhood mask mentions vertices beyond order");
    Graph g = *this;
    for (int u = 0; u < n_; ++u)
        if (neighborhood & bit(u)) g.rows_[static_cast<size_t>(u)] |= bit(n_);
    g.rows_.push_back(neighborhood);
    g.n_ = n_ + 1;
    return g;
}

Graph Graph::induced(std::uint64_t vertex_mask) const {
    std::vector<int> keep;
    for (int v = 0; v < n_; ++v)
        if (vertex_mask & bit(v)) keep.push_back(v);
    Graph g(static_cast<int>(keep.size()));
    for (size_t i = 0; i < keep.size(); ++i)
        for (size_t j = i + 1; j < keep.size(); ++j)
            if (rows_[static_cast<size_t>(keep[i])] & bit(keep[j]))
                g = g.with_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

Graph Graph::strip_isolated() const {
    std::uint64_t mask = 0;
    for (int v = 0; v < n_; ++v)
        if (rows_[static_cast<size_t>(v)]) mask |= bit(v);
    return induced(mask);
}

Graph Graph::relabel(const std::vector<int>& new_label) const {
    if (static_cast<int>(new_label.size()) != n_) fail("relabeling vector has wrong length");
    std::vector<bool> seen(static_cast<size_t>(n_), false);
    for (int v = 0; v < n_; ++v) {
        int w = new_label[static_cast<size_t>(v)];
        if (w < 0 || w >= n_ || seen[static_cast<size_t>(w)]) fail("relabeling is not a permutation");
        seen[static_cast<size_t>(w)] = true;
    }
    Graph g(n_);
    for (auto [u, v] : edges()) g = g.with_edge(new_label[static_cast<size_t>(u)], new_label[static_cast<size_t>(v)]);
    return g;
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edge_list) {
    Graph g(n);
    for (auto [u, v] : edge_list) g = g.with_edge(u, v);
    return g;
}

Graph complement(const Graph& g) {
    int n = g.order();
    Graph c(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) c = c.with_edge(u, v);
    return c;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    if (a.order() + b.order() > kMaxVertices) fail("combined order exceeds 64");
    Graph g(a.order() + b.order());
    for (auto [u, v] : a.edges()) g = g.with_edge(u, v);
    for (auto [u, v] : b.edges()) g = g.with_edge(a.order() + u, a.order() + v);
    return g;
}

Graph join(const Graph& a, const Graph& b) {
    Graph g = disjoint_union(a, b);
    for (int u = 0; u < a.order(); ++u)
        for (int v = 0; v < b.order(); ++v) g = g.with_edge(u, a.order() + v);
    return g;
}

// ---------------------------------------------------------------------------
// Canonical form.
//
// Orderings are explored with the usual individualization-refinement scheme:
// an initial equitable refinement of the degree partition, then backtracking
// that always draws the next vertex from the first unplaced cell. Among all
// explored orderings we keep the one whose column-major upper-triangle
// bit-string is lexicographically smallest. Column-major means the bits for
// pairs inside the first k placed vertices form a prefix, so partial
// orderings can be pruned against the best known string column by column.

namespace {

struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<std::uint64_t> adj;  // adj[v] over original labels

    std::vector<std::uint64_t> best_cols;  // best_cols[k]: bits of vertex at
                                           // position k vs positions < k,
                                           // position 0 most significant
    std::vector<int> best_order;           // best_order[k] = original vertex
    bool have_best = false;

    std::vector<std::uint64_t> cur_cols;
    std::vector<int> cur_order;

    explicit CanonSearch(const Graph& graph) : g(graph), n(graph.order()) {
        adj.resize(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) adj[static_cast<size_t>(v)] = g.neighbors(v);
        cur_cols.resize(static_cast<size_t>(n));
        cur_order.resize(static_cast<size_t>(n));
    }

    // Equitable refinement: split cells by per-cell neighbor counts until
    // stable. Cell order depends only on the counts, never on labels.
    static void refine(const std::vector<std::uint64_t>& adj, std::vector<std::vector<int>>& cells) {
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<std::uint64_t> cell_mask(cells.size(), 0);
            for (size_t c = 0; c < cells.size(); ++c)
                for (int v : cells[c]) cell_mask[c] |= std::uint64_t{1} << v;
            std::vector<std::vector<int>> next;
            for (const auto& cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                std::vector<std::pair<std::vector<int>, int>> keyed;
                for (int v : cell) {
                    std::vector<int> key;
                    key.reserve(cells.size());
                    for (std::uint64_t m : cell_mask) key.push_back(std::popcount(adj[static_cast<size_t>(v)] & m));
                    keyed.emplace_back(std::move(key), v);
                }
                std::stable_sort(keyed.begin(), keyed.end(),
                                 [](const auto& a, const auto& b) { return a.first < b.first; });
                size_t i = 0;
                while (i < keyed.size()) {
                    size_t j = i;
                    std::vector<int> sub;
                    while (j < keyed.size() && keyed[j].first == keyed[i].first) sub.push_back(keyed[j++].second);
                    std::sort(sub.begin(), sub.end());
                    if (sub.size() != cell.size()) changed = true;
                    next.push_back(std::move(sub));
                    i = j;
                }
            }
            cells = std::move(next);
        }
    }

    void run() {
        if (n == 0) return;
        // Initial partition: cells by ascending degree, then refine.
        std::vector<std::vector<int>> cells;
        {
            std::vector<std::pair<int, int>> by_deg;
            for (int v = 0; v < n; ++v) by_deg.emplace_back(std::popcount(adj[static_cast<size_t>(v)]), v);
            std::sort(by_deg.begin(), by_deg.end());
            for (size_t i = 0; i < by_deg.size();) {
                size_t j = i;
                std::vector<int> cell;
                while (j < by_deg.size() && by_deg[j].first == by_deg[i].first) cell.push_back(by_deg[j++].second);
                cells.push_back(std::move(cell));
                i = j;
            }
            refine(adj, cells);
        }
        extend(cells, 0, /*tied_with_best=*/true);
    }

    void extend(const std::vector<std::vector<int>>& cells, int k, bool tied_with_best) {
        if (k == n) {
            // tied_with_best means equal to best; a strictly smaller string
            // switched tied_with_best off at some column and was recorded as
            // it completed below.
            if (!have_best) {
                best_cols = cur_cols;
                best_order = cur_order;
                have_best = true;
            }
            return;
        }
        const std::vector<int>& cell = cells.front();
        for (int v : cell) {
            std::uint64_t col = 0;
            for (int i = 0; i < k; ++i)
                col = (col << 1) | ((adj[static_cast<size_t>(v)] >> cur_order[static_cast<size_t>(i)]) & 1);
            bool tied = tied_with_best;
            if (have_best && tied) {
                if (col > best_cols[static_cast<size_t>(k)]) continue;  // prune: cannot beat best
                if (col < best_cols[static_cast<size_t>(k)]) tied = false;
            }
            cur_cols[static_cast<size_t>(k)] = col;
            cur_order[static_cast<size_t>(k)] = v;
            if (!tied && have_best) {
                // Strictly smaller prefix: every completion beats best, take
                // the first one this subtree produces and keep exploring it
                // as the new baseline.
                have_best = false;
            }
            extend(split_on(cells, v), k + 1, tied);
        }
    }

    // Remove v from its (leading) cell and split the remaining cells by
    // adjacency to v, non-neighbors first.
    static std::vector<std::vector<int>> split_on(const std::vector<std::vector<int>>& cells, int v) {
        std::vector<std::vector<int>> next;
        for (size_t c = 0; c < cells.size(); ++c) {
            std::vector<int> rest;
            for (int u : cells[c])
                if (u != v) rest.push_back(u);
            if (rest.empty()) continue;
            next.push_back(std::move(rest));
        }
        return next;
    }
};

}  // namespace

Graph canonical_form(const Graph& g) {
    int n = g.order();
    if (n <= 1) return g;
    CanonSearch search(g);
    // split_on does not use adjacency; do that here to keep the recursion
    // allocation-light: re-split each step against the placed vertex.
    // (CanonSearch::extend calls split_on, then the next extend re-splits.)
    search.run();
    std::vector<int> pos(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) pos[static_cast<size_t>(search.best_order[static_cast<size_t>(k)])] = k;
    return g.relabel(pos);
}

// ---------------------------------------------------------------------------
// graph6

namespace {

void append_order(std::string& out, int n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        // long form: '~' then 18 bits in three 6-bit groups
        out.push_back('~');
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
}

}  // namespace

std::string graph6_encode(const Graph& g) {
    int n = g.order();
    std::string out;
    append_order(out, n);
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

Graph graph6_decode(std::string_view text) {
    if (text.empty()) fail("empty graph6 string");
    size_t pos = 0;
    auto raw = [&](size_t i) -> int {
        if (i >= text.size()) fail("graph6 string truncated");
        int c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) fail("invalid graph6 byte");
        return c - 63;
    };
    long n;
    if (text[0] == '~') {
        if (text.size() >= 2 && text[1] == '~') fail("graph6 orders beyond 64 unsupported");
        n = (static_cast<long>(raw(1)) << 12) | (raw(2) << 6) | raw(3);
        pos = 4;
    } else {
        n = raw(0);
        pos = 1;
    }
    if (n > kMaxVertices) fail("graph6 order " + std::to_string(n) + " exceeds 64");
    long nbits = n * (n - 1) / 2;
    size_t need = static_cast<size_t>((nbits + 5) / 6);
    if (text.size() != pos + need) fail("graph6 string has wrong length");
    Graph g(static_cast<int>(n));
    long idx = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++idx) {
            int word = raw(pos + static_cast<size_t>(idx / 6));
            if ((word >> (5 - idx % 6)) & 1) g = g.with_edge(u, v);
        }
    }
    // trailing pad bits must be zero
    for (long i = idx; i < static_cast<long>(need) * 6; ++i) {
        int word = raw(pos + static_cast<size_t>(i / 6));
        if ((word >> (5 - i % 6)) & 1) fail("graph6 padding bits not zero");
    }
    return g;
}

// ---------------------------------------------------------------------------
// edge-list text

Graph parse_edge_list(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) fail("edge list must look like \"n: u-v,u-v\"");
    int n = 0;
    {
        std::string_view head = text.substr(0, colon);
        while (!head.empty() && head.front() == ' ') head.remove_prefix(1);
        while (!head.empty() && head.back() == ' ') head.remove_suffix(1);
        auto [p, ec] = std::from_chars(head.data(), head.data() + head.size(), n);
        if (ec != std::errc() || p != head.data() + head.size()) fail("bad vertex count in edge list");
    }
    std::vector<std::pair<int, int>> edges;
    std::string_view rest = text.substr(colon + 1);
    size_t i = 0;
    auto skip_ws = [&] { while (i < rest.size() && (rest[i] == ' ' || rest[i] == '\t')) ++i; };
    skip_ws();
    while (i < rest.size()) {
        auto read_int = [&]() -> int {
            int value = 0;
            auto [p, ec] = std::from_chars(rest.data() + i, rest.data() + rest.size(), value);
            if (ec != std::errc()) fail("bad vertex in edge list");
            i = static_cast<size_t>(p - rest.data());
            return value;
        };
        int u = read_int();
        skip_ws();
        if (i >= rest.size() || rest[i] != '-') fail("expected '-' in edge list");
        ++i;
        skip_ws();
        int v = read_int();
        edges.emplace_back(u, v);
        skip_ws();
        if (i < rest.size()) {
            if (rest[i] != ',') fail("expected ',' between edges");
            ++i;
            skip_ws();
        }
    }
    return build_graph(n, edges);
}

std::string format_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + ":";
    bool first = true;
    for (auto [u, v] : g.edges()) {
        out += first ? " " : ",";
        out += std::to_string(u) + "-" + std::to_string(v);
        first = false;
    }
    return out;
}

Graph parse_graph(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    if (text.find(':') != std::string_view::npos) return parse_edge_list(text);
    return graph6_decode(text);
}

}  // namespace degpow
