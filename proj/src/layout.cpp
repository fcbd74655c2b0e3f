#include "rlp/layout.hpp"

#include <algorithm>
#include <functional>
#include <json.hpp>
#include <map>
#include <set>
#include <tuple>

namespace rlp {

namespace {

// Half-edge mesh carrying face successor links and the corner angle consumed
// at the head of each half-edge. Half-edges 2e and 2e+1 are mates.
struct Mesh {
    std::vector<int32_t> tgt, nxt, prv;
    std::vector<int16_t> corner;  // angle at tgt[h] between h and nxt[h]
    std::vector<int8_t> dir;      // 0=E 1=N 2=W 3=S
    std::vector<int32_t> oedge;   // original edge id or -1 (per edge)
    std::vector<int32_t> overt;   // original vertex id or -1
    std::vector<int32_t> seed;    // one outgoing half-edge per vertex

    int32_t nv() const { return static_cast<int32_t>(overt.size()); }
    int32_t nh() const { return static_cast<int32_t>(tgt.size()); }
    static int32_t rev(int32_t h) { return h ^ 1; }

    int32_t new_vertex(int32_t orig) {
        overt.push_back(orig);
        seed.push_back(-1);
        return nv() - 1;
    }
    // allocates the mate pair (a->b, b->a); caller wires nxt/prv/corner
    int32_t new_edge(int32_t a, int32_t b, int orig, int dir_ab) {
        tgt.push_back(b);
        tgt.push_back(a);
        nxt.push_back(-1);
        nxt.push_back(-1);
        prv.push_back(-1);
        prv.push_back(-1);
        corner.push_back(-1);
        corner.push_back(-1);
        dir.push_back(static_cast<int8_t>(dir_ab));
        dir.push_back(static_cast<int8_t>((dir_ab + 2) & 3));
        oedge.push_back(orig);
        if (seed[a] < 0) seed[a] = nh() - 2;
        if (seed[b] < 0) seed[b] = nh() - 1;
        return nh() - 2;
    }
    void link(int32_t a, int32_t b) {
        nxt[a] = b;
        prv[b] = a;
    }
    int32_t origin(int32_t h) const { return tgt[rev(h)]; }
    int turn_at(int32_t h) const { return 2 - corner[h] / 90; }
};

// Compass directions for every half-edge, propagated from the corner table;
// consistency around cycles is the face-sum law.
std::vector<int8_t> assign_dirs(const PlaneSPGraph& g, const OrthoRep& rep) {
    std::vector<int8_t> dir(2 * g.edges.size(), -1);
    require(!g.edges.empty(), "cannot orient an edgeless graph");
    std::vector<int32_t> queue;
    auto half_from = [&](int32_t v, int32_t e) {
        return 2 * e + (g.edges[e].first == v ? 0 : 1);
    };
    int32_t h0 = half_from(g.s, g.rotation[g.s][0]);  // first edge at s runs east
    dir[h0] = 0;
    dir[Mesh::rev(h0)] = 2;
    queue.push_back(g.s);
    queue.push_back(g.other(g.rotation[g.s][0], g.s));
    std::vector<char> done(g.n, 0);
    while (!queue.empty()) {
        int32_t v = queue.back();
        queue.pop_back();
        if (done[v]) continue;
        int deg = g.degree(v);
        int known = -1;
        for (int i = 0; i < deg; ++i)
            if (dir[half_from(v, g.rotation[v][i])] >= 0) known = i;
        if (known < 0) continue;  // revisited later once a neighbor fixes it
        done[v] = 1;
        int8_t d = dir[half_from(v, g.rotation[v][known])];
        for (int k = 0; k < deg; ++k) {
            int i = (known + k) % deg;
            int j = (i + 1) % deg;
            d = static_cast<int8_t>((d + rep.angle[v][i] / 90) & 3);
            int32_t h = half_from(v, g.rotation[v][j]);
            if (dir[h] < 0) {
                dir[h] = d;
                dir[Mesh::rev(h)] = static_cast<int8_t>((d + 2) & 3);
                int32_t w = g.other(g.rotation[v][j], v);
                if (!done[w]) queue.push_back(w);
            } else {
                require(dir[h] == d, "direction propagation disagrees with the angles");
            }
        }
    }
    for (int8_t x : dir) require(x >= 0, "graph not direction-connected");
    return dir;
}

Mesh build_mesh(const PlaneSPGraph& g, const OrthoRep& rep) {
    Mesh m;
    for (int32_t v = 0; v < g.n; ++v) m.new_vertex(v);
    std::vector<int8_t> dirs = assign_dirs(g, rep);
    for (int32_t e = 0; e < static_cast<int32_t>(g.edges.size()); ++e) {
        m.new_edge(g.edges[e].first, g.edges[e].second, e, dirs[2 * e]);
    }
    // face successor: leave the head along the rotation predecessor
    for (int32_t e = 0; e < static_cast<int32_t>(g.edges.size()); ++e) {
        for (int side = 0; side < 2; ++side) {
            int32_t h = 2 * e + side;
            int32_t y = m.tgt[h];
            int deg = g.degree(y);
            int i = g.slot_of(e, y);
            int j = (i + deg - 1) % deg;
            int32_t e2 = g.rotation[y][j];
            int32_t h2 = 2 * e2 + (g.edges[e2].first == y ? 0 : 1);
            m.link(h, h2);
            m.corner[h] = rep.angle[y][j];
        }
    }
    return m;
}

// One rectangulating cut: y = tgt[h_r] carries a reflex corner. The chord
// leaves y one quarter-turn counterclockwise from the face's departure edge
// and lands on the first edge where the cumulative turn since y reaches +2.
void cut_once(Mesh& m, int32_t h_r, std::vector<int32_t>& touched, std::vector<char>& in_skip) {
    int32_t y = m.tgt[h_r];
    int a = m.corner[h_r];
    require(a >= 270, "cut needs a reflex corner");
    int32_t a1 = m.nxt[h_r];
    int c = 0;
    int32_t hit = a1;
    while (true) {
        c += m.turn_at(hit);
        hit = m.nxt[hit];
        if (c == 2) break;
        require(hit != h_r, "cut scan wrapped around the face");
    }
    int32_t p = m.origin(hit), q = m.tgt[hit];
    (void)p;
    int8_t delta = static_cast<int8_t>((m.dir[a1] + 1) & 3);

    int32_t mid = m.new_vertex(-1);
    // hit becomes p->mid; K takes over mid->q
    int32_t K = m.new_edge(mid, q, m.oedge[hit >> 1], m.dir[hit]);
    int32_t Kr = Mesh::rev(K);
    int32_t C = m.new_edge(y, mid, -1, delta);
    int32_t Cr = Mesh::rev(C);

    int32_t hit_r = Mesh::rev(hit);
    int32_t after_hit = m.nxt[hit];
    int32_t before_hit_r = m.prv[hit_r];
    in_skip.resize(m.nh(), 0);
    in_skip[Kr] = in_skip[hit_r];  // a subdivided outer-boundary edge stays outer

    m.tgt[hit] = mid;
    if (m.seed[q] == hit_r) m.seed[q] = Kr;
    m.seed[mid] = Cr;

    // face A keeps the arrival side of the reflex corner
    m.link(h_r, C);
    m.corner[h_r] = static_cast<int16_t>(a - 90);
    m.link(C, K);
    m.corner[C] = 90;
    m.link(K, after_hit);
    m.corner[K] = m.corner[hit];
    // face B closes through the chord
    m.link(hit, Cr);
    m.corner[hit] = 90;
    m.link(Cr, a1);
    m.corner[Cr] = 90;
    // the neighbor face of the hit edge gains a straight corner at mid
    m.link(before_hit_r, Kr);
    m.corner[Kr] = m.corner[hit_r];
    m.link(Kr, hit_r);
    m.corner[hit_r] = 180;

    touched.push_back(h_r);
    touched.push_back(hit);
}

// Rectangulates every face reachable from the given half-edges except the
// one containing `skip`. Returns the number of cuts.
int rectangulate(Mesh& m, int32_t skip_half) {
    int cuts = 0;
    std::vector<int32_t> work;
    for (int32_t h = 0; h < m.nh(); ++h) work.push_back(h);
    std::vector<int32_t> skip_face;
    {
        int32_t h = skip_half;
        do {
            skip_face.push_back(h);
            h = m.nxt[h];
        } while (h != skip_half);
    }
    std::vector<char> in_skip(m.nh(), 0);
    for (int32_t h : skip_face) in_skip[h] = 1;

    while (!work.empty()) {
        int32_t h0 = work.back();
        work.pop_back();
        if (in_skip[h0]) continue;
        // find a reflex corner on this face
        int32_t h = h0;
        int32_t reflex = -1;
        do {
            if (m.corner[h] >= 270) {
                reflex = h;
                break;
            }
            h = m.nxt[h];
        } while (h != h0);
        if (reflex < 0) continue;
        std::vector<int32_t> touched;
        cut_once(m, reflex, touched, in_skip);
        ++cuts;
        for (int32_t t : touched) work.push_back(t);
    }
    return cuts;
}

// Rebuilds rotation lists from the mesh links: the counterclockwise
// successor of an outgoing half-edge is the mate of its face predecessor.
// Original vertices keep their original first rotation slot so the external
// face convention survives refinement.
void mesh_to_graph(const Mesh& m, const PlaneSPGraph& orig, PlaneSPGraph& g, OrthoRep& rep,
                   std::vector<int32_t>& oedge, std::vector<int32_t>& overt) {
    g = PlaneSPGraph{};
    g.n = m.nv();
    overt = m.overt;
    g.edges.resize(m.nh() / 2);
    oedge.assign(m.nh() / 2, -1);
    for (int32_t e = 0; e < m.nh() / 2; ++e) {
        g.edges[e] = {m.origin(2 * e), m.tgt[2 * e]};
        oedge[e] = m.oedge[e];
    }
    g.rotation.assign(g.n, {});
    rep.angle.assign(g.n, {});
    for (int32_t v = 0; v < g.n; ++v) {
        int32_t h0 = m.seed[v];
        require(h0 >= 0 && m.origin(h0) == v, "bad rotation seed");
        int32_t h = h0;
        std::vector<int32_t> halves;
        do {
            halves.push_back(h);
            h = Mesh::rev(m.prv[h]);  // ccw successor
        } while (h != h0);
        if (m.overt[v] >= 0) {
            int32_t want = orig.rotation[m.overt[v]][0];
            for (std::size_t i = 0; i < halves.size(); ++i) {
                if (m.oedge[halves[i] >> 1] == want) {
                    std::rotate(halves.begin(), halves.begin() + i, halves.end());
                    break;
                }
            }
        }
        for (int32_t hh : halves) {
            g.rotation[v].push_back(hh >> 1);
            rep.angle[v].push_back(m.corner[m.prv[hh]]);
        }
    }
}

}  // namespace

RefinedRep refine(const PlaneSPGraph& g, const OrthoRep& rep) {
    Mesh m = build_mesh(g, rep);
    // the half-edge arriving at s via rotation slot 0 consumes the external
    // corner (s, deg-1)
    int32_t e0 = g.rotation[g.s][0];
    int32_t ext_half = 2 * e0 + (g.edges[e0].first == g.s ? 1 : 0);
    RefinedRep out;
    out.cuts = rectangulate(m, ext_half);
    mesh_to_graph(m, g, out.g, out.rep, out.orig_edge, out.orig_vertex);
    return out;
}

namespace {

// Attaches the surrounding frame: a rectangle of four corner posts plus a
// connector into a reflex corner of the external face. Returns a half-edge
// on the frame's outer face.
int32_t attach_frame(Mesh& m, int32_t ext_half) {
    // deterministic reflex corner on the external face
    int32_t h = ext_half, pick = -1;
    do {
        if (m.corner[h] >= 270 && (pick < 0 || h < pick)) pick = h;
        h = m.nxt[h];
    } while (h != ext_half);
    require(pick >= 0, "external face has no corner to attach to");
    int32_t y = m.tgt[pick];
    int a = m.corner[pick];
    int32_t a1 = m.nxt[pick];
    int8_t delta = static_cast<int8_t>((m.dir[a1] + 1) & 3);

    int32_t fc = m.new_vertex(-1);
    int32_t c1 = m.new_vertex(-1);
    int32_t c2 = m.new_vertex(-1);
    int32_t c3 = m.new_vertex(-1);
    int32_t c4 = m.new_vertex(-1);

    auto D = [&](int k) { return (delta + k) & 3; };
    int32_t conn = m.new_edge(y, fc, -1, delta);
    int32_t w1 = m.new_edge(fc, c1, -1, D(1));
    int32_t w2 = m.new_edge(c1, c2, -1, D(2));
    int32_t w3 = m.new_edge(c2, c3, -1, D(3));
    int32_t w4 = m.new_edge(c3, c4, -1, D(0));
    int32_t w5 = m.new_edge(c4, fc, -1, D(1));

    // annulus face: ... pick(y, a-90), conn, w1..w5, rev(conn), a1 ...
    m.link(pick, conn);
    m.corner[pick] = static_cast<int16_t>(a - 90);
    m.link(conn, w1);
    m.corner[conn] = 90;
    int32_t walls[5] = {w1, w2, w3, w4, w5};
    for (int i = 0; i + 1 < 5; ++i) {
        m.link(walls[i], walls[i + 1]);
        m.corner[walls[i]] = 90;
    }
    m.link(w5, Mesh::rev(conn));
    m.corner[w5] = 90;
    m.link(Mesh::rev(conn), a1);
    m.corner[Mesh::rev(conn)] = 90;

    // outer face: rev(w5), rev(w4), rev(w3), rev(w2), rev(w1) with 270 posts
    int32_t outer[5] = {Mesh::rev(w5), Mesh::rev(w4), Mesh::rev(w3), Mesh::rev(w2),
                        Mesh::rev(w1)};
    for (int i = 0; i + 1 < 5; ++i) m.link(outer[i], outer[i + 1]);
    m.link(outer[4], outer[0]);
    // 270 at the four corner posts, straight through the subdivided side
    m.corner[outer[0]] = 270;
    m.corner[outer[1]] = 270;
    m.corner[outer[2]] = 270;
    m.corner[outer[3]] = 270;
    m.corner[outer[4]] = 180;
    return outer[0];
}

struct SegmentGraphs {
    std::vector<int32_t> vseg, hseg;  // per vertex
    std::vector<int64_t> x_of_vseg, y_of_hseg;
};

// Longest-path coordinates over the two segment constraint graphs.
SegmentGraphs solve_segments(const Mesh& m) {
    int32_t n = m.nv();
    // union collinear runs: a 180 corner chains the two edges at its vertex
    std::vector<int32_t> uf(2 * n);
    for (int32_t i = 0; i < 2 * n; ++i) uf[i] = i;
    auto find = [&uf](int32_t x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    // slot 2v: the vertical segment through v; 2v+1: horizontal
    auto seg_slot = [&](int32_t v, bool vertical) { return 2 * v + (vertical ? 0 : 1); };
    for (int32_t h = 0; h < m.nh(); h += 2) {
        bool vertical = m.dir[h] & 1;
        int32_t a = m.origin(h), b = m.tgt[h];
        uf[find(seg_slot(a, vertical))] = find(seg_slot(b, vertical));
    }
    SegmentGraphs sg;
    sg.vseg.resize(n);
    sg.hseg.resize(n);
    std::map<int32_t, int32_t> vmap, hmap;
    for (int32_t v = 0; v < n; ++v) {
        int32_t rv = find(seg_slot(v, true));
        int32_t rh = find(seg_slot(v, false));
        if (!vmap.count(rv)) vmap[rv] = static_cast<int32_t>(vmap.size());
        if (!hmap.count(rh)) hmap[rh] = static_cast<int32_t>(hmap.size());
        sg.vseg[v] = vmap[rv];
        sg.hseg[v] = hmap[rh];
    }

    auto longest = [&](bool x_axis, int32_t nseg, const std::vector<int32_t>& seg) {
        std::vector<std::vector<int32_t>> adj(nseg);
        std::vector<int32_t> indeg(nseg, 0);
        for (int32_t h = 0; h < m.nh(); h += 2) {
            int8_t d = m.dir[h];
            int32_t lo, hi;
            if (x_axis) {
                if (d & 1) continue;  // vertical edge: no x relation
                lo = d == 0 ? m.origin(h) : m.tgt[h];
                hi = d == 0 ? m.tgt[h] : m.origin(h);
            } else {
                if (!(d & 1)) continue;
                lo = d == 1 ? m.origin(h) : m.tgt[h];
                hi = d == 1 ? m.tgt[h] : m.origin(h);
            }
            adj[seg[lo]].push_back(seg[hi]);
            ++indeg[seg[hi]];
        }
        std::vector<int64_t> dist(nseg, 0);
        std::vector<int32_t> queue;
        for (int32_t i = 0; i < nseg; ++i)
            if (indeg[i] == 0) queue.push_back(i);
        std::size_t head = 0;
        int32_t seen = 0;
        while (head < queue.size()) {
            int32_t u = queue[head++];
            ++seen;
            for (int32_t w : adj[u]) {
                if (dist[w] < dist[u] + 1) dist[w] = dist[u] + 1;
                if (--indeg[w] == 0) queue.push_back(w);
            }
        }
        require(seen == nseg, "cycle in a compaction constraint graph");
        return dist;
    };
    int32_t nv = static_cast<int32_t>(vmap.size()), nhseg = static_cast<int32_t>(hmap.size());
    sg.x_of_vseg = longest(true, nv, sg.vseg);
    sg.y_of_hseg = longest(false, nhseg, sg.hseg);
    return sg;
}

}  // namespace

GridDrawing compact(const PlaneSPGraph& g, const OrthoRep& rep) {
    Mesh m = build_mesh(g, rep);
    int32_t e0 = g.rotation[g.s][0];
    int32_t ext_half = 2 * e0 + (g.edges[e0].first == g.s ? 1 : 0);

    int32_t outer_half = attach_frame(m, ext_half);
    rectangulate(m, outer_half);

    SegmentGraphs sg = solve_segments(m);
    GridDrawing d;
    d.coords.assign(g.n, {0, 0});
    for (int32_t v = 0; v < m.nv(); ++v) {
        int32_t orig = m.overt[v];
        if (orig < 0) continue;
        d.coords[orig] = {sg.x_of_vseg[sg.vseg[v]], sg.y_of_hseg[sg.hseg[v]]};
    }
    int64_t dx = d.coords[g.s].first, dy = d.coords[g.s].second;
    for (auto& [x, y] : d.coords) {
        x -= dx;
        y -= dy;
    }
    return d;
}

VerificationReport verify_drawing(const PlaneSPGraph& g, const GridDrawing& d) {
    VerificationReport r;
    if (d.coords.size() != static_cast<std::size_t>(g.n)) {
        r.violations.push_back(
            {ViolationKind::EmbeddingMismatch, "drawing", "coordinate count mismatch"});
        return r;
    }
    {
        std::vector<std::pair<int64_t, int64_t>> pts = d.coords;
        std::sort(pts.begin(), pts.end());
        for (std::size_t i = 0; i + 1 < pts.size(); ++i)
            if (pts[i] == pts[i + 1])
                r.violations.push_back({ViolationKind::Crossing,
                                        "vertices", "two vertices share a point"});
    }
    struct Seg {
        int64_t fixed, lo, hi;  // fixed coordinate; span on the other axis
        int32_t edge;
    };
    std::vector<Seg> hs, vs;
    for (int32_t e = 0; e < static_cast<int32_t>(g.edges.size()); ++e) {
        auto [u, v] = g.edges[e];
        auto [x1, y1] = d.coords[u];
        auto [x2, y2] = d.coords[v];
        if (y1 == y2 && x1 != x2) {
            hs.push_back({y1, std::min(x1, x2), std::max(x1, x2), e});
        } else if (x1 == x2 && y1 != y2) {
            vs.push_back({x1, std::min(y1, y2), std::max(y1, y2), e});
        } else {
            r.violations.push_back({ViolationKind::Crossing, "edge " + std::to_string(e),
                                    "not an axis-aligned positive-length segment"});
        }
    }
    if (!r.passed()) return r;

    // collinear overlaps
    auto overlap_check = [&](std::vector<Seg>& segs, const char* what) {
        std::sort(segs.begin(), segs.end(), [](const Seg& a, const Seg& b) {
            return std::tie(a.fixed, a.lo, a.hi) < std::tie(b.fixed, b.lo, b.hi);
        });
        for (std::size_t i = 0; i + 1 < segs.size(); ++i) {
            if (segs[i].fixed == segs[i + 1].fixed && segs[i + 1].lo < segs[i].hi)
                r.violations.push_back({ViolationKind::Crossing,
                                        std::string(what) + " " + std::to_string(segs[i].edge) +
                                            "/" + std::to_string(segs[i + 1].edge),
                                        "collinear overlap"});
        }
    };
    overlap_check(hs, "edges");
    overlap_check(vs, "edges");

    // horizontal x vertical crossings: sweep over x with active horizontals
    struct Event {
        int64_t x;
        int kind;  // 0 = open horizontal, 1 = vertical probe, 2 = close horizontal
        std::size_t idx;
    };
    std::vector<Event> ev;
    for (std::size_t i = 0; i < hs.size(); ++i) {
        ev.push_back({hs[i].lo, 0, i});
        ev.push_back({hs[i].hi, 2, i});
    }
    for (std::size_t i = 0; i < vs.size(); ++i) ev.push_back({vs[i].fixed, 1, i});
    std::sort(ev.begin(), ev.end(), [](const Event& a, const Event& b) {
        return std::tie(a.x, a.kind) < std::tie(b.x, b.kind);
    });
    std::multiset<int64_t> active;  // y of open horizontals
    std::vector<std::multiset<int64_t>::iterator> slot(hs.size());
    for (const Event& e : ev) {
        if (e.kind == 0) {
            slot[e.idx] = active.insert(hs[e.idx].fixed);
        } else if (e.kind == 2) {
            active.erase(slot[e.idx]);
        } else {
            const Seg& v = vs[e.idx];
            auto it = active.upper_bound(v.lo);
            for (; it != active.end() && *it < v.hi; ++it) {
                // interior of the vertical hits the row *it: crossing unless
                // the horizontal only touches at its own endpoint (their
                // intersection point would then be a shared endpoint, which
                // the open/close sweep bounds already exclude strictly)
                r.violations.push_back({ViolationKind::Crossing,
                                        "edge " + std::to_string(v.edge),
                                        "crosses a horizontal edge"});
                break;
            }
        }
    }
    if (!r.passed()) return r;

    // rotation consistency: geometric ccw order around each vertex matches
    for (int32_t v = 0; v < g.n; ++v) {
        int deg = g.degree(v);
        if (deg <= 1) continue;
        std::vector<int> want;
        for (int32_t e : g.rotation[v]) {
            int32_t w = g.other(e, v);
            int64_t dx = d.coords[w].first - d.coords[v].first;
            int64_t dy = d.coords[w].second - d.coords[v].second;
            int dir = dx > 0 ? 0 : dx < 0 ? 2 : (dy > 0 ? 1 : 3);
            want.push_back(dir);
        }
        // one full counterclockwise revolution in rotation order
        int total = 0;
        bool ok = true;
        for (int k = 0; k < deg; ++k) {
            int step = (want[(k + 1) % deg] - want[k]) & 3;
            if (step == 0) ok = false;
            total += step;
        }
        ok = ok && total == 4;
        if (!ok)
            r.violations.push_back({ViolationKind::EmbeddingMismatch, "vertex " + std::to_string(v),
                                    "geometric order disagrees with the rotation"});
    }
    return r;
}

std::string emit_svg(const PlaneSPGraph& g, const GridDrawing& d, int scale) {
    int64_t maxx = 0, maxy = 0;
    int64_t minx = 0, miny = 0;
    for (auto& [x, y] : d.coords) {
        maxx = std::max(maxx, x);
        maxy = std::max(maxy, y);
        minx = std::min(minx, x);
        miny = std::min(miny, y);
    }
    auto px = [&](int64_t x) { return (x - minx) * scale; };
    auto py = [&](int64_t y) { return (maxy - y) * scale; };
    int64_t w = (maxx - minx) * scale + scale;
    int64_t h = (maxy - miny) * scale + scale;
    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"";
    s += std::to_string(-scale / 2) + " " + std::to_string(-scale / 2) + " " + std::to_string(w) +
         " " + std::to_string(h) + "\">\n";
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        auto [u, v] = g.edges[e];
        s += "  <line x1=\"" + std::to_string(px(d.coords[u].first)) + "\" y1=\"" +
             std::to_string(py(d.coords[u].second)) + "\" x2=\"" +
             std::to_string(px(d.coords[v].first)) + "\" y2=\"" +
             std::to_string(py(d.coords[v].second)) +
             "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    }
    for (int32_t v = 0; v < g.n; ++v) {
        s += "  <circle cx=\"" + std::to_string(px(d.coords[v].first)) + "\" cy=\"" +
             std::to_string(py(d.coords[v].second)) + "\" r=\"3\" fill=\"black\"/>\n";
    }
    s += "</svg>\n";
    return s;
}

std::string coords_to_json(const GridDrawing& d) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (std::size_t v = 0; v < d.coords.size(); ++v)
        j[std::to_string(v)] = {d.coords[v].first, d.coords[v].second};
    return j.dump();
}

}  // namespace rlp
