#include "invseq/gentree.hpp"

#include <algorithm>
#include <unordered_map>

#include "invseq/oracle.hpp"

namespace invseq::gentree {

std::int64_t Multiplicity::at(std::int64_t i) const {
    const std::int64_t num = c0 + c1 * i + c2 * i * i;
    if (num % den != 0) throw StructuralError("multiplicity is not an integer");
    return num / den;
}

std::string SuccessionRule::format(const Label& l) const {
    std::string s = "(";
    if (kind_names.size() > 1) s += kind_names.at(l.kind) + ",";
    for (int i = 0; i < kind_arity.at(l.kind); ++i) s += (i ? "," : "") + std::to_string(l.p[i]);
    return s + ")";
}

Int LevelDistribution::total(const SuccessionRule& rule) const {
    Int t = 0;
    for (const auto& [l, c] : counts)
        if (rule.counted.at(l.kind)) t += c;
    return t;
}

Int LevelDistribution::count_kind(int kind) const {
    Int t = 0;
    for (const auto& [l, c] : counts)
        if (l.kind == kind) t += c;
    return t;
}

namespace {

struct LabelHash {
    std::size_t operator()(const Label& l) const {
        std::size_t h = static_cast<std::size_t>(l.kind);
        for (int v : l.p) h = h * 1000003u + static_cast<std::size_t>(v);
        return h;
    }
};

using Dist = std::unordered_map<Label, Int, LabelHash>;

void validate(const SuccessionRule& rule, const Label& l) {
    if (l.kind < 0 || l.kind >= static_cast<int>(rule.kind_arity.size()))
        throw StructuralError(rule.id + ": production emitted an unknown label kind");
    for (int i = 0; i < 3; ++i) {
        if (l.p[i] < 0) throw StructuralError(rule.id + ": production emitted negative parameter in " + rule.format(l));
        if (i >= rule.kind_arity[l.kind] && l.p[i] != 0)
            throw StructuralError(rule.id + ": production emitted a label with the wrong arity");
    }
}

void check_jump(const SuccessionRule& rule, int jump) {
    if (jump != 1 && jump != 2) throw StructuralError(rule.id + ": level jump must be 1 or 2");
}

// Visits every child individually.
class NaiveEmitter final : public Emitter {
public:
    NaiveEmitter(const SuccessionRule& r, std::array<Dist, 2>& out) : rule_(r), out_(out) {}
    const Int* parent = nullptr;

    void emit(const Label& child, std::int64_t mult, int jump) override {
        validate(rule_, child);
        check_jump(rule_, jump);
        if (mult < 0) throw StructuralError(rule_.id + ": negative multiplicity");
        if (mult == 0) return;
        Int& slot = out_[jump - 1][child];
        if (mult == 1)
            slot += *parent;
        else
            mpz_addmul_ui(slot.get_mpz_t(), parent->get_mpz_t(), static_cast<unsigned long>(mult));
    }

    void emit_range(int kind, std::array<int, 3> base, std::array<int, 3> dir, int lo, int hi, Multiplicity mult,
                    int jump) override {
        for (int i = lo; i <= hi; ++i) {
            Label l{kind, {base[0] + i * dir[0], base[1] + i * dir[1], base[2] + i * dir[2]}};
            emit(l, mult.at(i), jump);
        }
    }

private:
    const SuccessionRule& rule_;
    std::array<Dist, 2>& out_;
};

// Folds each range into difference tables along its line of labels, so the
// cost per emission is constant regardless of the range length.
class RangedEmitter final : public Emitter {
public:
    RangedEmitter(const SuccessionRule& r, std::array<Dist, 2>& out) : rule_(r), out_(out), naive_(r, out) {}
    const Int* parent = nullptr;

    void emit(const Label& child, std::int64_t mult, int jump) override {
        naive_.parent = parent;
        naive_.emit(child, mult, jump);
    }

    void emit_range(int kind, std::array<int, 3> base, std::array<int, 3> dir, int lo, int hi, Multiplicity mult,
                    int jump) override {
        if (lo > hi) return;
        int axis = 0;
        while (axis < 3 && dir[axis] == 0) ++axis;
        if (hi - lo < 3 || axis == 3 || (dir[axis] != 1 && dir[axis] != -1)) {
            naive_.parent = parent;
            naive_.emit_range(kind, base, dir, lo, hi, mult, jump);
            return;
        }
        check_jump(rule_, jump);
        const Label first{kind, {base[0] + lo * dir[0], base[1] + lo * dir[1], base[2] + lo * dir[2]}};
        const Label last{kind, {base[0] + hi * dir[0], base[1] + hi * dir[1], base[2] + hi * dir[2]}};
        validate(rule_, first);
        validate(rule_, last);
        // Position along the line is t = dir[axis]*param[axis] = t0 + i.
        const int t0 = dir[axis] * base[axis];
        LineKey key{kind, jump, dir, {}};
        for (int j = 0; j < 3; ++j) key.anchor[j] = base[j] - t0 * dir[j];
        auto& line = lines_[key];
        const int tl = t0 + lo, th = t0 + hi;
        auto P = [&](int t) {
            const std::int64_t v = mult.at(t - t0);
            return v;
        };
        // Check non-negativity at the ends and near a quadratic's vertex.
        std::vector<int> probes{lo, hi};
        if (mult.c2 != 0) {
            const double v = -static_cast<double>(mult.c1) / (2.0 * static_cast<double>(mult.c2));
            for (int d = -1; d <= 1; ++d) {
                const int i = static_cast<int>(v) + d;
                if (i >= lo && i <= hi) probes.push_back(i);
            }
        }
        for (int i : probes)
            if (mult.at(i) < 0) throw StructuralError(rule_.id + ": negative multiplicity");
        const int deg = mult.c2 != 0 ? 2 : (mult.c1 != 0 ? 1 : 0);
        add_poly(line, tl, deg, P(tl), P(tl + 1), P(tl + 2), +1);
        add_poly(line, th + 1, deg, P(th + 1), P(th + 2), P(th + 3), -1);
    }

    void flush() {
        for (auto& [key, line] : lines_) {
            if (line.cells.empty()) continue;
            Int acc1 = 0, acc2 = 0, acc3 = 0;
            for (std::size_t k = 0; k < line.cells.size(); ++k) {
                const int t = line.lo + static_cast<int>(k);
                const auto& cell = line.cells[k];
                acc3 += cell[2];
                acc2 += cell[1];
                acc1 += cell[0];
                acc2 += acc3;
                acc1 += acc2;
                if (sgn(acc1) == 0) continue;
                if (sgn(acc1) < 0) throw StructuralError(rule_.id + ": negative accumulated count");
                Label l{key.kind, {key.anchor[0] + t * key.dir[0], key.anchor[1] + t * key.dir[1],
                                   key.anchor[2] + t * key.dir[2]}};
                out_[key.jump - 1][l] += acc1;
            }
        }
        lines_.clear();
    }

private:
    struct LineKey {
        int kind;
        int jump;
        std::array<int, 3> dir;
        std::array<int, 3> anchor;
        auto operator<=>(const LineKey&) const = default;
    };
    // Dense impulse tables indexed by t - lo.
    struct Line {
        int lo = 0;
        std::vector<std::array<Int, 3>> cells;

        std::array<Int, 3>& at(int t) {
            if (cells.empty()) {
                lo = t;
                cells.resize(1);
            } else if (t < lo) {
                std::vector<std::array<Int, 3>> grown(cells.size() + (lo - t));
                std::move(cells.begin(), cells.end(), grown.begin() + (lo - t));
                cells = std::move(grown);
                lo = t;
            } else if (t - lo >= static_cast<int>(cells.size())) {
                cells.resize(t - lo + 1);
            }
            return cells[t - lo];
        }
    };

    // Adds sign * P(t) for all t >= x as impulses: the j-th forward
    // difference of P at x goes to the order-(j+1) table at x + j.
    void add_poly(Line& line, int x, int deg, std::int64_t p0, std::int64_t p1, std::int64_t p2, int sign) {
        const std::int64_t diffs[3] = {p0, p1 - p0, p2 - 2 * p1 + p0};
        for (int j = 0; j <= deg; ++j) {
            const std::int64_t d = sign * diffs[j];
            if (d == 0) continue;
            Int& slot = line.at(x + j)[j];
            if (d > 0)
                mpz_addmul_ui(slot.get_mpz_t(), parent->get_mpz_t(), static_cast<unsigned long>(d));
            else
                mpz_submul_ui(slot.get_mpz_t(), parent->get_mpz_t(), static_cast<unsigned long>(-d));
        }
    }

    const SuccessionRule& rule_;
    std::array<Dist, 2>& out_;
    NaiveEmitter naive_;
    std::map<LineKey, Line> lines_;
};

}  // namespace

std::vector<Child> expand(const SuccessionRule& rule, const Label& label) {
    std::array<Dist, 2> out;
    NaiveEmitter em(rule, out);
    const Int one = 1;
    em.parent = &one;
    rule.produce(label, em);
    std::vector<Child> children;
    for (int j = 0; j < 2; ++j)
        for (const auto& [l, c] : out[j])
            if (sgn(c) != 0) children.push_back({l, j + 1, c});
    std::sort(children.begin(), children.end(), [](const Child& x, const Child& y) {
        return std::tie(x.jump, x.label) < std::tie(y.jump, y.label);
    });
    return children;
}

namespace {

// Feeds every level's distribution to `visit` without retaining it.
template <class Visit>
void walk_levels(const SuccessionRule& rule, int n_max, Engine engine, Visit&& visit) {
    if (n_max < 0) return;
    validate(rule, rule.axiom);
    // pending[0] receives level n+1, pending[1] level n+2.
    std::array<Dist, 2> pending;
    Dist current;
    current[rule.axiom] = 1;
    for (int n = 0; n <= n_max; ++n) {
        visit(n, current);
        if (n == n_max) break;
        pending[0].reserve(current.size() * 2);
        if (engine == Engine::naive) {
            NaiveEmitter em(rule, pending);
            for (const auto& [l, c] : current) {
                em.parent = &c;
                rule.produce(l, em);
            }
        } else {
            RangedEmitter em(rule, pending);
            for (const auto& [l, c] : current) {
                em.parent = &c;
                rule.produce(l, em);
            }
            em.flush();
        }
        current = std::move(pending[0]);
        pending[0] = std::move(pending[1]);
        pending[1] = Dist{};
    }
}

}  // namespace

std::vector<LevelDistribution> run_rule_levels(const SuccessionRule& rule, int n_max, Engine engine) {
    std::vector<LevelDistribution> levels;
    walk_levels(rule, n_max, engine, [&](int n, const Dist& d) {
        LevelDistribution ld;
        ld.level = n;
        for (const auto& [l, c] : d)
            if (sgn(c) != 0) ld.counts.emplace(l, c);
        levels.push_back(std::move(ld));
    });
    return levels;
}

std::vector<Int> run_rule(const SuccessionRule& rule, int n_max, Engine engine) {
    std::vector<Int> terms;
    walk_levels(rule, n_max, engine, [&](int, const Dist& d) {
        Int t = 0;
        for (const auto& [l, c] : d)
            if (rule.counted[l.kind]) t += c;
        terms.push_back(std::move(t));
    });
    return terms;
}

namespace {

SuccessionRule make(std::string id, Label axiom, std::vector<std::string> names, std::vector<int> arity,
                    std::vector<bool> counted) {
    SuccessionRule r;
    r.id = std::move(id);
    r.axiom = axiom;
    r.kind_names = std::move(names);
    r.kind_arity = std::move(arity);
    r.counted = std::move(counted);
    return r;
}

constexpr std::array<int, 3> kNone{0, 0, 0};
constexpr std::array<int, 3> kFirst{1, 0, 0};
constexpr std::array<int, 3> kSecond{0, 1, 0};

}  // namespace

SuccessionRule rule_factorial() {
    auto r = make("omega.factorial", Label{0, {0, 0, 0}}, {"n"}, {1}, {true});
    r.produce = [](const Label& l, Emitter& e) { e.emit(Label{0, {l.p[0] + 1, 0, 0}}, l.p[0] + 1); };
    return r;
}

SuccessionRule rule_cat() {
    auto r = make("omega.cat", Label{0, {1, 0, 0}}, {"k"}, {1}, {true});
    r.produce = [](const Label& l, Emitter& e) { e.emit_range(0, kNone, kFirst, 2, l.p[0] + 1); };
    return r;
}

SuccessionRule rule_000_100() {
    auto r = make("omega.000_100", Label{0, {1, 0, 0}}, {"ab"}, {2}, {true});
    r.produce = [](const Label& l, Emitter& e) {
        const int a = l.p[0], b = l.p[1];
        if (b > 0) e.emit(Label{0, {a + 1, b - 1, 0}}, b);
        e.emit_range(0, {a + 1, b, 0}, {-1, 1, 0}, 1, a);
    };
    return r;
}

SuccessionRule rule_102_201() {
    using namespace kinds;
    auto r = make("omega.102_201", Label{a, {0, 0, 0}}, {"a", "b1", "b2", "b3", "c"}, {2, 1, 1, 1, 1},
                  {true, false, false, true, true});
    r.produce = [](const Label& l, Emitter& e) {
        switch (l.kind) {
            case a: {
                const int n = l.p[0], m = l.p[1];
                e.emit_range(a, {n + 1, 0, 0}, kSecond, m, n);
                e.emit_range(b1, kNone, kFirst, m, n - 1, Multiplicity{n, -1, 0, 1});
                e.emit_range(c, kNone, kFirst, 0, m - 1);
                break;
            }
            case b1:
                e.emit(l);
                e.emit(Label{b2, l.p});
                break;
            case b2:
                e.emit(l);
                e.emit(Label{b3, l.p});
                break;
            case b3:
                e.emit(l, 2);
                e.emit_range(c, kNone, kFirst, 0, l.p[0] - 1);
                break;
            case c:
                e.emit_range(c, kNone, kFirst, 0, l.p[0]);
                break;
        }
    };
    return r;
}

SuccessionRule rule_000_102() {
    auto r = make("omega.000_102", Label{0, {1, 0, 0}}, {"s"}, {1}, {true});
    r.produce = [](const Label& l, Emitter& e) {
        const std::int64_t s = l.p[0];
        e.emit_range(0, kNone, kFirst, 1, l.p[0], Multiplicity{s + 1, -1, 0, 1}, 1);
        e.emit_range(0, {1, 0, 0}, kFirst, 1, l.p[0], Multiplicity{s + 1, -1, 0, 1}, 2);
        // C(s+1-j, 2) copies of (j).
        e.emit_range(0, kNone, kFirst, 1, l.p[0], Multiplicity{s * (s + 1), -(2 * s + 1), 1, 2}, 2);
    };
    return r;
}

SuccessionRule rule_102_210() {
    using namespace kinds;
    auto r = make("omega.102_210", Label{a, {0, 0, 0}}, {"a", "b1", "b2", "c1", "c2"}, {1, 1, 1, 1, 1},
                  {true, true, true, true, true});
    r.produce = [](const Label& l, Emitter& e) {
        const int k = l.p[0];
        switch (l.kind) {
            case a:
                e.emit_range(a, kNone, kFirst, 1, k + 1);
                e.emit_range(b1, kNone, kFirst, 1, k - 1, Multiplicity{k, -1, 0, 1});
                break;
            case b1:
                e.emit(l);
                e.emit_range(b2, kNone, kFirst, 1, k + 1);
                e.emit_range(c1, kNone, kFirst, 1, k - 1);
                break;
            case b2:
                e.emit_range(b2, kNone, kFirst, 1, k + 1);
                break;
            case c1:
                e.emit(l);
                e.emit_range(c2, kNone, kFirst, 1, k);
                break;
            case c2:
                e.emit_range(c2, kNone, kFirst, 1, k);
                break;
        }
    };
    return r;
}

SuccessionRule rule_101_102_201() {
    using namespace kinds;
    auto r = make("omega.101_102_201", Label{unimodal, {0, 0, 0}}, {"nm", "l"}, {2, 1}, {true, true});
    r.produce = [](const Label& l, Emitter& e) {
        if (l.kind == unimodal) {
            const int n = l.p[0], m = l.p[1];
            e.emit_range(unimodal, {n + 1, 0, 0}, kSecond, m, n);
            e.emit_range(tail, kNone, kFirst, 0, m - 1);
        } else {
            e.emit_range(tail, kNone, kFirst, 0, l.p[0]);
        }
    };
    return r;
}

std::vector<std::string> rule_ids() {
    return {"omega.000_100", "omega.102_201", "omega.000_102", "omega.102_210",
            "omega.101_102_201", "omega.factorial", "omega.cat"};
}

SuccessionRule rule_by_id(const std::string& id) {
    if (id == "omega.000_100") return rule_000_100();
    if (id == "omega.102_201") return rule_102_201();
    if (id == "omega.000_102") return rule_000_102();
    if (id == "omega.102_210") return rule_102_210();
    if (id == "omega.101_102_201") return rule_101_102_201();
    if (id == "omega.factorial") return rule_factorial();
    if (id == "omega.cat") return rule_cat();
    throw Error("unknown succession rule id '" + id + "'");
}

std::vector<TreeLevel> grow_right_tree(const PatternSet& P, int n_max, std::uint64_t budget) {
    std::vector<TreeLevel> levels(static_cast<std::size_t>(std::max(n_max, -1) + 1));
    if (n_max < 0) return levels;
    std::uint64_t visited = 0;
    IntSeq seq;
    auto admissible = [&](int v) {
        seq.push_back(v);
        bool ok = true;
        for (const auto& p : P.patterns())
            if (contains_ending_at_last(seq, p)) {
                ok = false;
                break;
            }
        seq.pop_back();
        return ok;
    };
    std::function<void()> walk = [&]() {
        if (++visited > budget) throw BudgetExceeded("generating tree exceeds budget");
        const int d = static_cast<int>(seq.size());
        TreeLevel& lvl = levels[d];
        ++lvl.nodes;
        int children = 0;
        for (int v = 0; v <= d; ++v) {
            if (!admissible(v)) continue;
            ++children;
            if (d < n_max) {
                seq.push_back(v);
                walk();
                seq.pop_back();
            }
        }
        ++lvl.child_counts[children];
    };
    walk();
    return levels;
}

}  // namespace invseq::gentree
