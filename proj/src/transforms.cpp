#include "musat/transforms.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace musat {

static CnfFormula rename_above(const CnfFormula& f, int offset)
{
    std::vector<Clause> out;
    for (const Clause& c : f) {
        std::vector<Lit> lits;
        for (Lit l : c)
            lits.push_back(l > 0 ? l + offset : l - offset);
        out.push_back(Clause(std::move(lits)));
    }
    return CnfFormula(std::move(out));
}

CnfFormula split_compose(const CnfFormula& f1, const CnfFormula& f2, int p, int q,
                         const std::vector<Clause>& targets1,
                         const std::vector<Clause>& targets2, int k)
{
    if (p < 1 || q < 1)
        throw formula_error("split_compose: p and q must be at least 1");
    if ((int)targets1.size() != p || (int)targets2.size() != q)
        throw formula_error("split_compose: target counts do not match p,q");

    int offset = f1.max_var();
    CnfFormula g2 = rename_above(f2, offset);
    std::vector<Clause> targets2r;
    for (const Clause& c : targets2) {
        std::vector<Lit> lits;
        for (Lit l : c)
            lits.push_back(l > 0 ? l + offset : l - offset);
        targets2r.push_back(Clause(std::move(lits)));
    }
    int x = std::max(offset, g2.max_var()) + 1;

    auto widen = [&](const CnfFormula& f, const std::vector<Clause>& targets, Lit add) {
        std::vector<Clause> out(f.begin(), f.end());
        std::vector<bool> used(out.size(), false);
        for (const Clause& t : targets) {
            if ((int)t.size() >= k)
                throw formula_error("split_compose: target " + t.str() +
                                    " already at width k=" + std::to_string(k));
            bool found = false;
            for (std::size_t i = 0; i < out.size(); ++i) {
                if (!used[i] && out[i] == t) {
                    std::vector<Lit> lits(out[i].begin(), out[i].end());
                    lits.push_back(add);
                    out[i] = Clause(std::move(lits));
                    used[i] = true;
                    found = true;
                    break;
                }
            }
            if (!found)
                throw formula_error("split_compose: target " + t.str() +
                                    " is not a clause of the operand");
        }
        return out;
    };

    std::vector<Clause> all = widen(f1, targets1, x);
    std::vector<Clause> part2 = widen(g2, targets2r, -x);
    all.insert(all.end(), part2.begin(), part2.end());
    CnfFormula result(std::move(all));
    if (result.size() != f1.size() + f2.size())
        throw formula_error("split_compose: clause collision after composition");
    return result;
}

// Substitutes variable from -> to (or its negation when flip is set),
// deleting tautologies and merging duplicate literals.
static CnfFormula substitute_var(const CnfFormula& f, int from, int to, bool flip)
{
    std::vector<Clause> out;
    for (const Clause& c : f) {
        std::vector<Lit> lits;
        for (Lit l : c) {
            if (var_of(l) == from) {
                Lit image = is_pos(l) ? to : -to;
                lits.push_back(flip ? -image : image);
            } else {
                lits.push_back(l);
            }
        }
        if (auto r = Clause::try_make(std::move(lits)))
            out.push_back(*r);
    }
    return CnfFormula(std::move(out));
}

// Widths of clauses must be preserved by an identification step; a shrunk
// clause means the pair co-occurred with equal polarity somewhere.
static bool widths_preserved(const CnfFormula& before, const CnfFormula& after)
{
    std::multiset<std::size_t> a, b;
    for (const Clause& c : before)
        a.insert(c.size());
    for (const Clause& c : after)
        b.insert(c.size());
    // Tautology deletion removes full-width clauses; every surviving clause
    // must keep its width, so the after-multiset must be contained in before.
    return std::includes(a.begin(), a.end(), b.begin(), b.end());
}

CnfFormula merge_degree2_vars(const CnfFormula& f, const ClassSpec& cls)
{
    CnfFormula cur = f;
    for (;;) {
        OccurrenceProfile prof = degrees(cur);
        std::vector<int> deg2;
        for (const auto& [v, d] : prof.vars)
            if (d.total() == 2)
                deg2.push_back(v);
        if (deg2.size() <= 1)
            return cur;

        bool applied = false;
        for (std::size_t i = 0; i < deg2.size() && !applied; ++i)
            for (std::size_t j = 0; j < deg2.size() && !applied; ++j) {
                if (i == j)
                    continue;
                int y = deg2[i], x = deg2[j];
                for (bool flip : {false, true}) {
                    CnfFormula cand = substitute_var(cur, y, x, flip);
                    if (!widths_preserved(cur, cand))
                        continue;
                    if (!validate_class(cand, cls, stairway_of(cand, cls.k)).valid())
                        continue;
                    cur = cand;
                    applied = true;
                    break;
                }
            }
        if (!applied)
            return cur; // no class-preserving identification left
    }
}

CnfFormula identify_variables(const CnfFormula& f,
                              const std::vector<std::pair<int, int>>& pairs, int cap)
{
    CnfFormula cur = f;
    for (auto [from, to] : pairs) {
        OccurrenceProfile prof = degrees(cur);
        int merged = prof.vdeg(from) + prof.vdeg(to);
        if (merged > cap)
            throw formula_error("identify_variables: merged degree " +
                                std::to_string(merged) + " of " + std::to_string(from) +
                                "," + std::to_string(to) + " exceeds cap " +
                                std::to_string(cap));
        if (prof.vdeg(from) == 0 || prof.vdeg(to) == 0)
            throw formula_error("identify_variables: variable does not occur");
        cur = substitute_var(cur, from, to, false);
    }
    return cur;
}

CnfFormula np_hardness_reduce(const CnfFormula& f, int k, int p, int q,
                              const CnfFormula& gadget)
{
    if (p > q)
        std::swap(p, q); // polarity swap, w.l.o.g. p <= q
    if (p + q < 3 || q < 2)
        throw formula_error("np_hardness_reduce: requires p+q >= 3 and q >= 2");

    for (const Clause& c : f)
        if ((int)c.size() != k)
            throw formula_error("np_hardness_reduce: input must be a k-CNF");

    std::vector<Clause> clauses(f.begin(), f.end());
    int next = f.max_var() + 1;

    // Phase 1: rewrite over-occurring variables through implication cycles.
    // Fresh variables end up with one positive and two negative occurrences,
    // which fits every cap with p >= 1, q >= 2.
    for (;;) {
        std::map<int, std::pair<int, int>> deg;
        for (const Clause& c : clauses)
            for (Lit l : c)
                (is_pos(l) ? deg[var_of(l)].first : deg[var_of(l)].second)++;
        int bad = 0;
        for (const auto& [v, d] : deg) {
            int lo = std::min(d.first, d.second), hi = std::max(d.first, d.second);
            if (lo > p || hi > q) {
                bad = v;
                break; // ascending variable order: first offender
            }
        }
        if (bad == 0)
            break;

        std::vector<std::size_t> pos_idx, neg_idx;
        for (std::size_t i = 0; i < clauses.size(); ++i) {
            if (clauses[i].contains(bad))
                pos_idx.push_back(i);
            else if (clauses[i].contains(-bad))
                neg_idx.push_back(i);
        }
        int r = (int)pos_idx.size(), s = (int)neg_idx.size();
        std::vector<int> y(r), z(s);
        for (int i = 0; i < r; ++i)
            y[i] = next++;
        for (int i = 0; i < s; ++i)
            z[i] = next++;

        auto replace_in = [&](std::size_t idx, Lit old, Lit fresh) {
            std::vector<Lit> lits;
            for (Lit l : clauses[idx])
                lits.push_back(l == old ? fresh : l);
            clauses[idx] = Clause(std::move(lits));
        };
        for (int i = 0; i < r; ++i)
            replace_in(pos_idx[i], bad, -y[i]);
        for (int i = 0; i < s; ++i)
            replace_in(neg_idx[i], -bad, -z[i]);

        // Implication cycle forcing all y equal and all z equal to their negation.
        for (int i = 0; i + 1 < r; ++i)
            clauses.push_back(Clause{-y[i], y[i + 1]});
        clauses.push_back(Clause{-y[r - 1], -z[0]});
        for (int i = 0; i + 1 < s; ++i)
            clauses.push_back(Clause{z[i], -z[i + 1]});
        clauses.push_back(Clause{z[s - 1], y[0]});
    }

    // Phase 2: widen every 2-clause to width k with a fresh copy of the
    // gadget minus its first clause; the dropped clause's literals are forced
    // false in every model of the remainder.
    Clause dropped = *gadget.begin();
    CnfFormula rest = gadget.without_clause(dropped);
    std::vector<Lit> fill(dropped.begin(), dropped.end());
    fill.resize(k - 2);

    std::vector<Clause> out;
    for (const Clause& c : clauses) {
        if ((int)c.size() == k) {
            out.push_back(c);
            continue;
        }
        int offset = next - 1;
        for (const Clause& g : rest) {
            std::vector<Lit> lits;
            for (Lit l : g)
                lits.push_back(l > 0 ? l + offset : l - offset);
            out.push_back(Clause(std::move(lits)));
        }
        std::vector<Lit> lits(c.begin(), c.end());
        for (Lit l : fill)
            lits.push_back(l > 0 ? l + offset : l - offset);
        out.push_back(Clause(std::move(lits)));
        next += gadget.max_var();
    }
    return CnfFormula(std::move(out));
}

} // namespace musat
