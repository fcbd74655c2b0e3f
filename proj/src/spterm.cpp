#include "rlp/spterm.hpp"

#include <algorithm>
#include <cctype>

namespace rlp {

namespace {

struct Frame {
    TermKind kind;
    std::size_t open_at;
    std::vector<uint32_t> children;
};

std::size_t skip_ws(std::string_view s, std::size_t i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    return i;
}

}  // namespace

SPTerm parse_spterm(std::string_view text) {
    SPTerm out;
    std::vector<Frame> stack;
    std::size_t i = 0;
    // completed holds the root once the outermost term closes
    int64_t completed = -1;

    auto finish = [&](uint32_t node) {
        if (stack.empty()) {
            completed = node;
        } else {
            stack.back().children.push_back(node);
        }
    };

    while (true) {
        i = skip_ws(text, i);
        if (completed >= 0) break;
        if (i >= text.size()) throw ParseError(i, "term");
        char c = text[i];
        if (c == 'Q') {
            std::size_t j = i + 1;
            if (j >= text.size() || !std::isdigit(static_cast<unsigned char>(text[j])))
                throw ParseError(j, "chain length");
            int64_t len = 0;
            bool overflow = false;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
                len = len * 10 + (text[j] - '0');
                if (len > (int64_t{1} << 40)) overflow = true;
                ++j;
            }
            if (overflow) throw ParseError(i + 1, "chain length within range");
            if (len < 1) throw ParseError(i + 1, "chain length >= 1");
            TermNode n;
            n.kind = TermKind::QChain;
            n.length = len;
            finish(out.add(std::move(n)));
            i = j;
        } else if (c == 'S' || c == 'P') {
            std::size_t j = skip_ws(text, i + 1);
            if (j >= text.size() || text[j] != '(') throw ParseError(j, "'('");
            stack.push_back(Frame{c == 'S' ? TermKind::Series : TermKind::Parallel, i, {}});
            i = j + 1;
            continue;
        } else {
            throw ParseError(i, "'Q', 'S' or 'P'");
        }

        // a child just completed: consume separators / closers
        while (completed < 0) {
            i = skip_ws(text, i);
            if (stack.empty()) break;
            if (i >= text.size()) throw ParseError(i, "',' or ')'");
            if (text[i] == ',') {
                if (stack.back().kind == TermKind::Parallel && stack.back().children.size() >= 3)
                    throw ParseError(i, "')' (parallel composition takes at most 3 children)");
                ++i;
                break;  // parse next child
            }
            if (text[i] == ')') {
                Frame f = std::move(stack.back());
                stack.pop_back();
                if (f.children.size() < 2) {
                    throw ParseError(i, f.kind == TermKind::Series
                                            ? "at least 2 children in series composition"
                                            : "at least 2 children in parallel composition");
                }
                TermNode n;
                n.kind = f.kind;
                n.children = std::move(f.children);
                finish(out.add(std::move(n)));
                ++i;
                continue;  // maybe closes the parent too
            }
            throw ParseError(i, "',' or ')'");
        }
    }

    i = skip_ws(text, i);
    if (i != text.size()) throw ParseError(i, "end of input");
    out.root = static_cast<uint32_t>(completed);
    return out;
}

std::string to_text(const SPTerm& t) {
    std::string s;
    // stack of (node, next child index); -1 marks "emit open"
    std::vector<std::pair<uint32_t, std::size_t>> stack;
    stack.emplace_back(t.root, 0);
    while (!stack.empty()) {
        auto& [id, next] = stack.back();
        const TermNode& n = t.at(id);
        if (n.kind == TermKind::QChain) {
            s += 'Q';
            s += std::to_string(n.length);
            stack.pop_back();
            continue;
        }
        if (next == 0) s += (n.kind == TermKind::Series ? "S(" : "P(");
        if (next == n.children.size()) {
            s += ')';
            stack.pop_back();
            continue;
        }
        if (next > 0) s += ',';
        uint32_t child = n.children[next];
        ++next;
        stack.emplace_back(child, 0);
    }
    return s;
}

int64_t edge_count(const SPTerm& t) {
    int64_t total = 0;
    std::vector<uint32_t> st{t.root};
    while (!st.empty()) {
        const TermNode& n = t.at(st.back());
        st.pop_back();
        if (n.kind == TermKind::QChain) total += n.length;
        for (uint32_t c : n.children) st.push_back(c);
    }
    return total;
}

namespace {

// Iterative post-order over the term; visit(node) runs after its children.
template <typename F>
void post_order(const SPTerm& t, F&& visit) {
    std::vector<std::pair<uint32_t, std::size_t>> stack;
    stack.emplace_back(t.root, 0);
    while (!stack.empty()) {
        auto& [id, next] = stack.back();
        const TermNode& n = t.at(id);
        if (next < n.children.size()) {
            uint32_t child = n.children[next];
            ++next;
            stack.emplace_back(child, 0);
            continue;
        }
        visit(id);
        stack.pop_back();
    }
}

}  // namespace

SPTerm canonicalize(const SPTerm& t) {
    SPTerm out;
    std::vector<uint32_t> remap(t.nodes.size(), 0);
    post_order(t, [&](uint32_t id) {
        const TermNode& n = t.at(id);
        if (n.kind == TermKind::QChain) {
            TermNode q;
            q.kind = TermKind::QChain;
            q.length = n.length;
            remap[id] = out.add(std::move(q));
            return;
        }
        std::vector<uint32_t> kids;
        for (uint32_t c : n.children) {
            uint32_t rc = remap[c];
            if (out.at(rc).kind == n.kind) {
                // same-kind child: splice its children in place
                for (uint32_t gc : out.at(rc).children) kids.push_back(gc);
            } else {
                kids.push_back(rc);
            }
        }
        if (n.kind == TermKind::Series) {
            std::vector<uint32_t> merged;
            for (uint32_t c : kids) {
                if (!merged.empty() && out.nodes[merged.back()].kind == TermKind::QChain &&
                    out.nodes[c].kind == TermKind::QChain) {
                    out.nodes[merged.back()].length += out.nodes[c].length;
                } else {
                    merged.push_back(c);
                }
            }
            kids = std::move(merged);
        }
        if (kids.size() == 1) {
            remap[id] = kids[0];
            return;
        }
        TermNode m;
        m.kind = n.kind;
        m.children = std::move(kids);
        remap[id] = out.add(std::move(m));
    });
    out.root = remap[t.root];
    return out;
}

SPTerm mirrored(const SPTerm& t) {
    SPTerm out;
    std::vector<uint32_t> remap(t.nodes.size(), 0);
    post_order(t, [&](uint32_t id) {
        const TermNode& n = t.at(id);
        TermNode m;
        m.kind = n.kind;
        m.length = n.length;
        m.children.reserve(n.children.size());
        if (n.kind == TermKind::Parallel) {
            for (auto it = n.children.rbegin(); it != n.children.rend(); ++it)
                m.children.push_back(remap[*it]);
        } else {
            for (uint32_t c : n.children) m.children.push_back(remap[c]);
        }
        remap[id] = out.add(std::move(m));
    });
    out.root = remap[t.root];
    return out;
}

std::vector<DegreeProblem> validate_degrees(const SPTerm& raw) {
    SPTerm t = canonicalize(raw);
    // pole indegrees of every component, bottom-up
    std::vector<int> src(t.nodes.size(), 0), snk(t.nodes.size(), 0);
    post_order(t, [&](uint32_t id) {
        const TermNode& n = t.at(id);
        switch (n.kind) {
            case TermKind::QChain:
                src[id] = snk[id] = 1;
                break;
            case TermKind::Series:
                src[id] = src[n.children.front()];
                snk[id] = snk[n.children.back()];
                break;
            case TermKind::Parallel: {
                int a = 0, b = 0;
                for (uint32_t c : n.children) {
                    a += src[c];
                    b += snk[c];
                }
                src[id] = a;
                snk[id] = b;
                break;
            }
        }
    });

    std::vector<DegreeProblem> bad;
    if (src[t.root] > 4) bad.push_back({"source terminal", src[t.root]});
    if (snk[t.root] > 4) bad.push_back({"sink terminal", snk[t.root]});
    // every remaining vertex is a series join or a chain-internal vertex (degree 2)
    std::vector<uint32_t> stack{t.root};
    while (!stack.empty()) {
        uint32_t id = stack.back();
        stack.pop_back();
        const TermNode& n = t.at(id);
        if (n.kind == TermKind::Series) {
            for (std::size_t i = 0; i + 1 < n.children.size(); ++i) {
                int deg = snk[n.children[i]] + src[n.children[i + 1]];
                if (deg > 4)
                    bad.push_back({"series join after child " + std::to_string(i) + " of " +
                                       to_text(SPTerm{t.nodes, id}),
                                   deg});
            }
        }
        for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) stack.push_back(*it);
    }
    return bad;
}

}  // namespace rlp
