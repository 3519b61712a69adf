#include "coxcover/cover.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <set>
#include <sstream>

namespace coxcover {

FoldingData make_folding(SimplicialComplex L, CoxeterMatrix target,
                         const std::map<std::string, std::string>& f) {
    std::vector<int> fmap(L.num_vertices(), -1);
    for (int v = 0; v < L.num_vertices(); ++v) {
        auto it = f.find(L.vertex_label(v));
        if (it == f.end())
            throw invalid_folding_error("folding map missing generator " + L.vertex_label(v));
        int sp = target.index_of(it->second);
        if (sp < 0)
            throw invalid_folding_error("folding map hits unknown target generator " + it->second);
        fmap[v] = sp;
    }
    std::vector<bool> hit(target.rank(), false);
    for (int sp : fmap) hit[sp] = true;
    for (int sp = 0; sp < target.rank(); ++sp)
        if (!hit[sp])
            throw invalid_folding_error("folding map is not surjective onto the target generators");
    for (const auto& face : L.faces()) {
        std::set<int> image;
        std::uint64_t mask = 0;
        for (int v : face) {
            if (!image.insert(fmap[v]).second)
                throw invalid_folding_error("folding map is not injective on a face");
            mask |= std::uint64_t{1} << fmap[v];
        }
        if (!is_spherical(mask, target))
            throw invalid_folding_error("face image " + subset_label(mask, target.generators()) +
                                        " is not spherical in the target");
    }
    return FoldingData{std::move(L), std::move(target), std::move(fmap)};
}

CoxeterMatrix surgery(const FoldingData& fd) {
    const int n = fd.L.num_vertices();
    std::vector<std::vector<int>> entries(n, std::vector<int>(n, 0));
    for (int a = 0; a < n; ++a) {
        entries[a][a] = 1;
        for (int b = a + 1; b < n; ++b)
            if (fd.L.has_face({a, b}))
                entries[a][b] = entries[b][a] = fd.target.order(fd.f[a], fd.f[b]);
    }
    return CoxeterMatrix(fd.L.vertices(), entries);
}

namespace {

// Unique step toward `goal`: the chamber of cur's r-panel strictly closer to
// goal. Panels of a building are gated, so there is exactly one.
int step_toward(const Building& Cp, int cur, int r, int goal, RewriteBudget& budget) {
    const Word& u = Cp.delta(cur, goal);
    int found = -1;
    for (int y : Cp.system().panel(r, cur)) {
        if (y == cur) continue;
        const Word& v = Cp.delta(y, goal);
        if (v.size() + 1 != u.size()) continue;
        Word ru = u;
        ru.insert(ru.begin(), r);
        if (tits_reduce(ru, Cp.coxeter(), budget) != v) continue;
        if (found >= 0) throw std::logic_error("panel has two gates toward a chamber");
        found = y;
    }
    if (found < 0) throw std::logic_error("panel has no gate toward a chamber");
    return found;
}

// The unique downstairs gallery of the given (surgered) type between two
// chambers at the right Weyl distance.
std::vector<int> gallery_chambers_of_type(const Building& Cp, const FoldingData& fd,
                                          const Word& type, int from, int to,
                                          RewriteBudget& budget) {
    std::vector<int> chambers{from};
    int cur = from;
    for (std::size_t j = 0; j < type.size(); ++j) {
        int r = fd.f[type[j]];
        cur = (j + 1 == type.size()) ? to : step_toward(Cp, cur, r, to, budget);
        chambers.push_back(cur);
    }
    return chambers;
}

struct FlipContext {
    const Building& Cp;
    const FoldingData& fd;
    const CoxeterMatrix& W;  // surgered
    RewriteBudget& budget;
};

// Flip the alternating segment of length m at `pos`, replacing it by the
// unique gallery of the flipped type with the same endpoints.
Gallery flip_gallery(const FlipContext& ctx, const Gallery& g, int pos, int m) {
    const int s = g.type[pos], t = g.type[pos + 1];
    Word flipped_type = prod_word(t, s, m);
    std::vector<int> seg = gallery_chambers_of_type(
        ctx.Cp, ctx.fd, flipped_type, g.chambers[pos], g.chambers[pos + m], ctx.budget);
    Gallery out = g;
    for (int i = 0; i <= m; ++i) out.chambers[pos + i] = seg[i];
    for (int i = 0; i < m; ++i) out.type[pos + i] = flipped_type[i];
    return out;
}

// All flip positions applicable in the gallery's type.
std::vector<std::pair<int, int>> flip_positions(const Gallery& g, const CoxeterMatrix& W) {
    std::vector<std::pair<int, int>> out;
    const int n = g.length();
    for (int i = 0; i + 1 < n; ++i) {
        const int s = g.type[i], t = g.type[i + 1];
        if (s == t) continue;
        const int m = W.order(s, t);
        if (m == 0 || i + m > n) continue;
        bool alt = true;
        for (int j = 0; j < m && alt; ++j) alt = g.type[i + j] == ((j % 2 == 0) ? s : t);
        if (alt) out.emplace_back(i, m);
    }
    return out;
}

std::set<Gallery> flip_orbit(const FlipContext& ctx, const Gallery& g) {
    std::set<Gallery> seen{g};
    std::deque<Gallery> queue{g};
    while (!queue.empty()) {
        Gallery cur = std::move(queue.front());
        queue.pop_front();
        for (auto [pos, m] : flip_positions(cur, ctx.W)) {
            ctx.budget.charge();
            Gallery next = flip_gallery(ctx, cur, pos, m);
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return seen;
}

Gallery canonical_gallery(const FlipContext& ctx, const Gallery& g) {
    const std::set<Gallery>& orbit = flip_orbit(ctx, g);
    return *orbit.begin();
}

int find_repeated_letter(const Word& type) {
    for (std::size_t i = 0; i + 1 < type.size(); ++i)
        if (type[i] == type[i + 1]) return static_cast<int>(i);
    return -1;
}

// Shorten at a repeated letter: the three chambers around it are
// s-equivalent downstairs, so either two steps cancel or they merge to one.
Gallery cancel_gallery(const Gallery& g, int pos) {
    Gallery out;
    const int a = g.chambers[pos], c = g.chambers[pos + 2];
    out.chambers.assign(g.chambers.begin(), g.chambers.begin() + pos + 1);
    out.type.assign(g.type.begin(), g.type.begin() + pos);
    if (a != c) {
        out.chambers.push_back(c);
        out.type.push_back(g.type[pos]);
    }
    out.chambers.insert(out.chambers.end(), g.chambers.begin() + pos + 3, g.chambers.end());
    out.type.insert(out.type.end(), g.type.begin() + pos + 2, g.type.end());
    return out;
}

// Reduce a gallery by flips and cancellations until its type is reduced,
// then return the lexicographically least orbit member. The endpoints and
// the lifted endpoints upstairs are preserved by every move.
Gallery reduce_gallery(const FlipContext& ctx, Gallery g) {
    for (;;) {
        int pos = find_repeated_letter(g.type);
        if (pos >= 0) {
            ctx.budget.charge();
            g = cancel_gallery(g, pos);
            continue;
        }
        std::set<Gallery> orbit = flip_orbit(ctx, g);
        bool cancelled = false;
        for (const Gallery& member : orbit) {
            int p = find_repeated_letter(member.type);
            if (p >= 0) {
                ctx.budget.charge();
                g = cancel_gallery(member, p);
                cancelled = true;
                break;
            }
        }
        if (!cancelled) return *orbit.begin();
    }
}

}  // namespace

CoveredBall::CoveredBall(FoldingData folding, Building downstairs, int base, int radius,
                         std::vector<GalleryClass> classes,
                         std::vector<std::vector<std::vector<int>>> panels)
    : folding_(std::move(folding)),
      downstairs_(std::move(downstairs)),
      surgered_(surgery(folding_)),
      base_(base),
      radius_(radius),
      classes_(std::move(classes)),
      panels_(std::move(panels)) {
    if (base_ < 0 || base_ >= downstairs_.num_chambers())
        throw std::invalid_argument("base chamber out of range");
    if (static_cast<int>(panels_.size()) != surgered_.rank())
        throw std::invalid_argument("panel table rank mismatch");
    for (int i = 0; i < num_classes(); ++i) {
        if (!index_.emplace(classes_[i].rep, i).second)
            throw std::invalid_argument("duplicate class representative");
        if (classes_[i].rep.chambers.empty() || classes_[i].rep.chambers.front() != base_)
            throw std::invalid_argument("class representative must start at the base chamber");
    }
    panel_of_.assign(surgered_.rank(), std::vector<int>(num_classes(), -1));
    for (int s = 0; s < surgered_.rank(); ++s)
        for (std::size_t p = 0; p < panels_[s].size(); ++p)
            for (int member : panels_[s][p]) {
                if (member < 0 || member >= num_classes())
                    throw std::invalid_argument("panel member out of range");
                if (panel_of_[s][member] != -1)
                    throw std::invalid_argument("class appears in two panels of one generator");
                panel_of_[s][member] = static_cast<int>(p);
            }
}

int CoveredBall::class_index(const Gallery& canonical_rep) const {
    auto it = index_.find(canonical_rep);
    return it == index_.end() ? -1 : it->second;
}

const std::vector<int>* CoveredBall::panel_members(int s, int i) const {
    int p = panel_of_.at(s).at(i);
    return p < 0 ? nullptr : &panels_[s][p];
}

std::vector<int> CoveredBall::ball_classes(int n) const {
    std::vector<int> out;
    for (int i = 0; i < num_classes(); ++i)
        if (static_cast<int>(classes_[i].weyl.size()) <= n) out.push_back(i);
    return out;
}

std::vector<long long> CoveredBall::sphere_sizes() const {
    std::vector<long long> out(radius_ + 1, 0);
    for (const auto& c : classes_) ++out[c.weyl.size()];
    return out;
}

GalleryClass extend_class(const CoveredBall& ball, const GalleryClass& g, int s, int D) {
    const Building& Cp = ball.downstairs();
    const CoxeterMatrix& W = ball.surgered();
    const FoldingData& fd = ball.folding();
    RewriteBudget budget;
    FlipContext ctx{Cp, fd, W, budget};

    const int E = g.rep.endpoint();
    if (D == E || !Cp.system().adjacent(fd.f[s], E, D))
        throw std::invalid_argument("chamber is not adjacent to the class endpoint");

    Word ws = g.weyl;
    ws.push_back(s);
    ws = tits_reduce(ws, W, budget);

    if (ws.size() == g.weyl.size() + 1) {
        Gallery extended = g.rep;
        extended.chambers.push_back(D);
        extended.type.push_back(s);
        return GalleryClass{g.base, canonical_gallery(ctx, extended), ws};
    }

    // Length drops: flip the representative to a type ending in s, then
    // either retract the last step onto D or swap the last chamber for D.
    std::set<Gallery> orbit = flip_orbit(ctx, g.rep);
    const Gallery* ending = nullptr;
    for (const Gallery& member : orbit)
        if (!member.type.empty() && member.type.back() == s && ending == nullptr)
            ending = &member;
    if (ending == nullptr)
        throw std::logic_error("no orbit representative ends with the descent generator");

    Gallery result = *ending;
    if (result.chambers[result.chambers.size() - 2] == D) {
        result.chambers.pop_back();
        result.type.pop_back();
        return GalleryClass{g.base, canonical_gallery(ctx, result), ws};
    }
    result.chambers.back() = D;
    return GalleryClass{g.base, canonical_gallery(ctx, result), g.weyl};
}

CoveredBall build_ball(const FoldingData& fd, const Building& cprime, int base, int radius,
                       std::size_t class_cap) {
    if (radius < 0) throw std::invalid_argument("radius must be >= 0");
    if (!(cprime.coxeter() == fd.target))
        throw std::invalid_argument("building type does not match the folding target");
    BuildingVerdict verdict = verify_building(cprime);
    if (!verdict.pass)
        throw std::invalid_argument("downstairs building fails verification (" + verdict.axiom +
                                    "): " + verdict.detail);
    if (base < 0 || base >= cprime.num_chambers())
        throw std::invalid_argument("base chamber out of range");

    CoxeterMatrix W = surgery(fd);
    RewriteBudget budget;
    FlipContext ctx{cprime, fd, W, budget};

    std::vector<GalleryClass> classes;
    std::map<Gallery, int> index;
    std::vector<std::vector<std::vector<int>>> panels(W.rank());
    std::vector<std::vector<int>> panel_of(W.rank());

    Gallery root{{base}, {}};
    classes.push_back(GalleryClass{base, root, Word{}});
    index.emplace(root, 0);
    for (int s = 0; s < W.rank(); ++s) panel_of[s].push_back(-1);

    std::vector<int> frontier{0};
    for (int level = 0; level < radius && !frontier.empty(); ++level) {
        std::vector<int> next;
        for (int gi : frontier) {
            for (int s = 0; s < W.rank(); ++s) {
                Word ws = classes[gi].weyl;
                ws.push_back(s);
                ws = tits_reduce(ws, W, budget);
                if (ws.size() != classes[gi].weyl.size() + 1) continue;  // descent

                const int E = classes[gi].rep.endpoint();
                std::vector<int> panel{gi};
                for (int D : cprime.system().panel(fd.f[s], E)) {
                    if (D == E) continue;
                    Gallery extended = classes[gi].rep;
                    extended.chambers.push_back(D);
                    extended.type.push_back(s);
                    Gallery canon = canonical_gallery(ctx, extended);
                    auto it = index.find(canon);
                    int id;
                    if (it == index.end()) {
                        if (classes.size() >= class_cap)
                            throw budget_exhausted_error("class cap exceeded while building ball");
                        id = static_cast<int>(classes.size());
                        classes.push_back(GalleryClass{base, canon, ws});
                        index.emplace(canon, id);
                        for (int r = 0; r < W.rank(); ++r) panel_of[r].push_back(-1);
                        next.push_back(id);
                    } else {
                        id = it->second;
                        if (classes[id].weyl != ws)
                            throw std::logic_error("canonical class rediscovered with another word");
                    }
                    if (panel_of[s][id] != -1)
                        throw std::logic_error("class acquired two panels for one generator");
                    panel.push_back(id);
                }
                if (panel_of[s][gi] != -1)
                    throw std::logic_error("gate already has a panel for this generator");
                for (int member : panel) panel_of[s][member] = static_cast<int>(panels[s].size());
                panels[s].push_back(std::move(panel));
            }
        }
        frontier = std::move(next);
    }
    return CoveredBall(fd, cprime, base, radius, std::move(classes), std::move(panels));
}

Word weyl_distance(const CoveredBall& ball, int a, int b) {
    RewriteBudget budget;
    FlipContext ctx{ball.downstairs(), ball.folding(), ball.surgered(), budget};
    const Gallery& ga = ball.cls(a).rep;
    const Gallery& gb = ball.cls(b).rep;
    Gallery through;
    through.chambers.assign(ga.chambers.rbegin(), ga.chambers.rend());
    through.type.assign(ga.type.rbegin(), ga.type.rend());
    through.chambers.insert(through.chambers.end(), gb.chambers.begin() + 1, gb.chambers.end());
    through.type.insert(through.type.end(), gb.type.begin(), gb.type.end());
    Gallery reduced = reduce_gallery(ctx, std::move(through));
    return tits_reduce(reduced.type, ball.surgered(), budget);
}

namespace {

std::string class_name(const CoveredBall& ball, int i) {
    std::ostringstream out;
    out << "#" << i << "(over " << ball.downstairs().system().chamber_id(ball.projection(i))
        << ", |w|=" << ball.cls(i).weyl.size() << ")";
    return out.str();
}

}  // namespace

CoverVerdict verify_cover(const CoveredBall& ball, int interior_radius) {
    if (interior_radius > ball.radius() - 1)
        throw std::invalid_argument("interior radius must leave one step of slack");
    const CoxeterMatrix& W = ball.surgered();
    const Building& Cp = ball.downstairs();
    RewriteBudget budget;

    std::vector<int> interior = ball.ball_classes(interior_radius);
    std::map<std::pair<int, int>, Word> dist;
    auto delta = [&](int a, int b) -> const Word& {
        auto key = std::make_pair(a, b);
        auto it = dist.find(key);
        if (it == dist.end()) it = dist.emplace(key, weyl_distance(ball, a, b)).first;
        return it->second;
    };

    // WD1
    for (int a : interior)
        for (int b : interior)
            if (delta(a, b).empty() != (a == b))
                return {false, "WD1",
                        "delta(" + class_name(ball, a) + "," + class_name(ball, b) + ") trivial"};

    // WD2: panel mates step distances by one letter.
    for (int a : interior) {
        for (int s = 0; s < W.rank(); ++s) {
            const std::vector<int>* panel = ball.panel_members(s, a);
            if (panel == nullptr)
                return {false, "WD2", "interior class " + class_name(ball, a) + " lacks a panel"};
            for (int ap : *panel) {
                if (ap == a) continue;
                for (int b : interior) {
                    const Word& w = delta(a, b);
                    Word sw = w;
                    sw.insert(sw.begin(), s);
                    sw = tits_reduce(sw, W, budget);
                    const Word& got = delta(ap, b);
                    const bool longer = sw.size() == w.size() + 1;
                    const bool ok = longer ? got == sw : (got == sw || got == w);
                    if (!ok) {
                        std::ostringstream msg;
                        msg << "C'=" << class_name(ball, ap) << " C=" << class_name(ball, a)
                            << " D=" << class_name(ball, b) << " violates WD2 for generator "
                            << W.label(s);
                        return {false, "WD2", msg.str()};
                    }
                }
            }
        }
    }

    // WD3: a panel mate achieving sw exists.
    for (int a : interior)
        for (int b : interior) {
            const Word& w = delta(a, b);
            for (int s = 0; s < W.rank(); ++s) {
                Word sw = w;
                sw.insert(sw.begin(), s);
                sw = tits_reduce(sw, W, budget);
                const std::vector<int>* panel = ball.panel_members(s, a);
                if (panel == nullptr)
                    return {false, "WD3",
                            "interior class " + class_name(ball, a) + " lacks a panel"};
                bool found = false;
                for (int ap : *panel)
                    if (ap != a && delta(ap, b) == sw) found = true;
                if (!found) {
                    std::ostringstream msg;
                    msg << "no neighbour of " << class_name(ball, a) << " realizes s.delta toward "
                        << class_name(ball, b) << " for generator " << W.label(s);
                    return {false, "WD3", msg.str()};
                }
            }
        }

    // Local isomorphism: panels project bijectively onto downstairs panels.
    for (int s = 0; s < W.rank(); ++s)
        for (const auto& panel : ball.panels()[s]) {
            int gate = panel.front();
            for (int member : panel)
                if (ball.cls(member).weyl.size() < ball.cls(gate).weyl.size()) gate = member;
            if (static_cast<int>(ball.cls(gate).weyl.size()) > interior_radius) continue;
            const auto& down = Cp.system().panel(ball.folding().f[s], ball.projection(gate));
            if (panel.size() != down.size())
                return {false, "local-iso",
                        "panel size mismatch at " + class_name(ball, gate) + " generator " +
                            W.label(s)};
            std::set<int> images;
            for (int member : panel) images.insert(ball.projection(member));
            if (images != std::set<int>(down.begin(), down.end()))
                return {false, "local-iso",
                        "panel projection is not a bijection at " + class_name(ball, gate)};
        }

    // Spherical residues: the projection restricts to a bijection.
    SphericalPoset sp = spherical_poset(W);
    for (std::uint64_t mask : sp.subsets()) {
        if (std::popcount(mask) < 2) continue;
        std::vector<int> T;
        for (int s = 0; s < W.rank(); ++s)
            if (mask & (std::uint64_t{1} << s)) T.push_back(s);
        GroupEnumeration wt = enumerate_group(W.restrict(mask), 1u << 20);
        int diam = 0;
        for (const Word& w : wt.elements) diam = std::max(diam, static_cast<int>(w.size()));
        std::vector<int> fT;
        for (int s : T) fT.push_back(ball.folding().f[s]);
        std::sort(fT.begin(), fT.end());
        fT.erase(std::unique(fT.begin(), fT.end()), fT.end());
        for (int g = 0; g < ball.num_classes(); ++g) {
            if (static_cast<int>(ball.cls(g).weyl.size()) + diam > ball.radius()) continue;
            // Upstairs T-residue by breadth-first search over panels.
            std::set<int> res{g};
            std::deque<int> queue{g};
            bool complete = true;
            while (!queue.empty() && complete) {
                int x = queue.front();
                queue.pop_front();
                for (int s : T) {
                    const std::vector<int>* panel = ball.panel_members(s, x);
                    if (panel == nullptr) {
                        complete = false;
                        break;
                    }
                    for (int y : *panel)
                        if (res.insert(y).second) queue.push_back(y);
                }
            }
            if (!complete)
                return {false, "residue",
                        "residue of " + class_name(ball, g) + " leaves the materialized ball"};
            std::vector<int> down = residue(Cp.system(), ball.projection(g), fT);
            std::set<int> images;
            for (int x : res) images.insert(ball.projection(x));
            if (res.size() != down.size() || images != std::set<int>(down.begin(), down.end())) {
                std::ostringstream msg;
                msg << "residue " << subset_label(mask, W.generators()) << " of "
                    << class_name(ball, g) << " does not project bijectively";
                return {false, "residue", msg.str()};
            }
        }
    }

    // Flip closure: the whole orbit of each representative is reduced, ends
    // at the same chamber, and canonicalizes to the representative.
    {
        FlipContext ctx{Cp, ball.folding(), W, budget};
        for (int g : ball.ball_classes(interior_radius)) {
            std::set<Gallery> orbit = flip_orbit(ctx, ball.cls(g).rep);
            if (!(*orbit.begin() == ball.cls(g).rep))
                return {false, "flip-closure",
                        "representative of " + class_name(ball, g) + " is not orbit-minimal"};
            for (const Gallery& member : orbit) {
                if (member.endpoint() != ball.projection(g))
                    return {false, "flip-closure",
                            "orbit of " + class_name(ball, g) + " changes endpoint"};
                if (tits_reduce(member.type, W, budget) != ball.cls(g).weyl)
                    return {false, "flip-closure",
                            "orbit of " + class_name(ball, g) + " changes the Weyl word"};
                if (find_repeated_letter(member.type) >= 0)
                    return {false, "flip-closure",
                            "orbit of " + class_name(ball, g) + " contains a non-reduced gallery"};
            }
        }
    }

    // Deck consistency: every downstairs chamber within the interior radius
    // has a lift in the corresponding ball.
    for (int X = 0; X < Cp.num_chambers(); ++X) {
        if (static_cast<int>(Cp.delta(ball.base_chamber(), X).size()) > interior_radius) continue;
        bool found = false;
        for (int g : interior)
            if (ball.projection(g) == X) found = true;
        if (!found)
            return {false, "deck",
                    "downstairs chamber " + Cp.system().chamber_id(X) + " has no lift in the ball"};
    }

    return {};
}

FlagNerveReport flag_nerve_check(const FoldingData& fd) {
    FlagNerveReport report;
    const SimplicialComplex& L = fd.L;
    const int n = L.num_vertices();
    if (n > 20) throw std::invalid_argument("flag check supports at most 20 vertices");

    std::vector<std::vector<int>> cliques;  // candidate masks by popcount
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if (mask & (std::uint64_t{1} << v)) verts.push_back(v);
        if (verts.size() < 2) continue;
        bool clique = true;
        for (std::size_t a = 0; a < verts.size() && clique; ++a)
            for (std::size_t b = a + 1; b < verts.size() && clique; ++b)
                clique = L.has_face({verts[a], verts[b]});
        if (clique && !L.has_face(verts)) cliques.push_back(verts);
    }
    if (!cliques.empty()) {
        std::sort(cliques.begin(), cliques.end(),
                  [](const auto& a, const auto& b) { return a.size() < b.size(); });
        report.is_flag = false;
        for (int v : cliques.front()) report.missing_clique.push_back(L.vertex_label(v));
        return report;
    }
    report.is_flag = true;
    report.nerve_matches = nerve(surgery(fd)) == L;
    if (!report.nerve_matches)
        throw std::logic_error("flag complex does not equal the nerve of its surgered system");
    return report;
}

}  // namespace coxcover
