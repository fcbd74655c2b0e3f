#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rlp/errors.hpp"

namespace rlp {

enum class TermKind : uint8_t { QChain, Series, Parallel };

// One node of a series-parallel composition term. Terms are kept in a flat
// arena (children are indices) so that deeply nested instances never touch
// the call stack.
struct TermNode {
    TermKind kind = TermKind::QChain;
    int64_t length = 0;                // QChain only: number of edges, >= 1
    std::vector<uint32_t> children;    // Series >= 2, Parallel 2..3 (parsed input)
};

struct SPTerm {
    std::vector<TermNode> nodes;
    uint32_t root = 0;

    const TermNode& at(uint32_t i) const { return nodes[i]; }
    uint32_t add(TermNode n) {
        nodes.push_back(std::move(n));
        return static_cast<uint32_t>(nodes.size() - 1);
    }
};

// Grammar: term := "Q" INT | "S(" term ("," term)+ ")" | "P(" term "," term ["," term] ")"
// Whitespace is free. Errors carry the byte offset of the offending token.
SPTerm parse_spterm(std::string_view text);

std::string to_text(const SPTerm& t);

int64_t edge_count(const SPTerm& t);

// Structural cleanup used by the pipeline: splices Series children into
// Series parents and Parallel children into Parallel parents (parallel
// composition is associative and the splice preserves the left-to-right
// embedding order), merges adjacent QChain children of a Series, and
// collapses single-child compositions. Parse trees are left untouched for
// round-trip use; everything downstream consumes the canonical form.
SPTerm canonicalize(const SPTerm& t);

// Left-right reflection of the plane embedding: Parallel children reverse,
// Series children keep their order.
SPTerm mirrored(const SPTerm& t);

struct DegreeProblem {
    std::string where;
    int degree = 0;
};

// Degrees of the induced graph, checked structurally: series join vertices
// sum the adjacent children's pole indegrees; terminals take the root's pole
// indegree. Returns every offender in DFS order (empty when fine).
std::vector<DegreeProblem> validate_degrees(const SPTerm& t);

inline void require_valid_degrees(const SPTerm& t) {
    auto bad = validate_degrees(t);
    if (!bad.empty()) throw DegreeViolation(bad.front().where, bad.front().degree);
}

}  // namespace rlp
