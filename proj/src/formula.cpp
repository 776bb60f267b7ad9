#include "musat/formula.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace musat {

static void sort_dedupe(std::vector<Lit>& lits)
{
    std::sort(lits.begin(), lits.end(), lit_less);
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
}

static bool has_tautology(const std::vector<Lit>& sorted)
{
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
        if (sorted[i] == -sorted[i + 1])
            return true;
    return false;
}

Clause::Clause(std::vector<Lit> lits) : lits_(std::move(lits))
{
    for (Lit l : lits_)
        if (l == 0)
            throw formula_error("literal 0 is not allowed");
    sort_dedupe(lits_);
    if (has_tautology(lits_))
        throw formula_error("tautological clause: " + str());
}

std::optional<Clause> Clause::try_make(std::vector<Lit> lits)
{
    sort_dedupe(lits);
    if (has_tautology(lits))
        return std::nullopt;
    Clause c;
    c.lits_ = std::move(lits);
    return c;
}

bool Clause::contains(Lit l) const
{
    return std::binary_search(lits_.begin(), lits_.end(), l, lit_less);
}

bool Clause::contains_var(int v) const
{
    return contains(v) || contains(-v);
}

bool Clause::operator<(const Clause& o) const
{
    return std::lexicographical_compare(lits_.begin(), lits_.end(),
                                        o.lits_.begin(), o.lits_.end(), lit_less);
}

std::string Clause::str() const
{
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < lits_.size(); ++i)
        out << (i ? "," : "") << lits_[i];
    out << "}";
    return out.str();
}

CnfFormula::CnfFormula(std::vector<Clause> clauses) : clauses_(std::move(clauses))
{
    std::sort(clauses_.begin(), clauses_.end());
    clauses_.erase(std::unique(clauses_.begin(), clauses_.end()), clauses_.end());
}

bool CnfFormula::contains(const Clause& c) const
{
    return std::binary_search(clauses_.begin(), clauses_.end(), c);
}

std::vector<int> CnfFormula::variables() const
{
    std::set<int> vars;
    for (const Clause& c : clauses_)
        for (Lit l : c)
            vars.insert(var_of(l));
    return std::vector<int>(vars.begin(), vars.end());
}

int CnfFormula::max_var() const
{
    int m = 0;
    for (const Clause& c : clauses_)
        for (Lit l : c)
            m = std::max(m, var_of(l));
    return m;
}

std::size_t CnfFormula::width() const
{
    std::size_t w = 0;
    for (const Clause& c : clauses_)
        w = std::max(w, c.size());
    return w;
}

CnfFormula CnfFormula::with_clause(const Clause& c) const
{
    std::vector<Clause> cl = clauses_;
    cl.push_back(c);
    return CnfFormula(std::move(cl));
}

CnfFormula CnfFormula::without_clause(const Clause& c) const
{
    std::vector<Clause> cl;
    cl.reserve(clauses_.size());
    for (const Clause& d : clauses_)
        if (!(d == c))
            cl.push_back(d);
    return CnfFormula(std::move(cl));
}

std::string CnfFormula::str() const
{
    std::ostringstream out;
    out << "{";
    for (std::size_t i = 0; i < clauses_.size(); ++i)
        out << (i ? ", " : "") << clauses_[i].str();
    out << "}";
    return out.str();
}

int OccurrenceProfile::vdeg(int v) const
{
    auto it = vars.find(v);
    return it == vars.end() ? 0 : it->second.total();
}

int OccurrenceProfile::ldeg(Lit l) const
{
    auto it = vars.find(var_of(l));
    if (it == vars.end())
        return 0;
    return is_pos(l) ? it->second.pos : it->second.neg;
}

OccurrenceProfile degrees(const CnfFormula& f)
{
    OccurrenceProfile p;
    for (const Clause& c : f)
        for (Lit l : c) {
            auto& d = p.vars[var_of(l)];
            (is_pos(l) ? d.pos : d.neg)++;
        }
    return p;
}

Stairway::Stairway(std::vector<int> entries) : entries_(std::move(entries))
{
    for (int a : entries_)
        if (a < 1)
            throw formula_error("stairway entries must be positive");
    std::sort(entries_.begin(), entries_.end(), std::greater<int>());
}

int Stairway::sum() const
{
    int s = 0;
    for (int a : entries_)
        s += a;
    return s;
}

std::string Stairway::str() const
{
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out << (i ? "," : "") << entries_[i];
    out << ")";
    return out.str();
}

Stairway Stairway::parse(const std::string& text)
{
    std::vector<int> entries;
    std::string body = text;
    if (!body.empty() && body.front() == '(')
        body = body.substr(1, body.size() >= 2 && body.back() == ')' ? body.size() - 2
                                                                     : std::string::npos);
    std::istringstream in(body);
    std::string tok;
    while (std::getline(in, tok, ','))
        if (!tok.empty() && tok.find_first_not_of(" \t") != std::string::npos)
            entries.push_back(std::stoi(tok));
    return Stairway(std::move(entries));
}

Stairway stairway_of(const CnfFormula& f, int k)
{
    std::vector<int> deficits;
    for (const Clause& c : f) {
        if ((int)c.size() > k)
            throw formula_error("clause " + c.str() + " wider than k=" + std::to_string(k));
        if ((int)c.size() < k)
            deficits.push_back(k - (int)c.size());
    }
    return Stairway(std::move(deficits));
}

ClassSpec ClassSpec::ks(int k, int s)
{
    ClassSpec c;
    c.k = k;
    c.s = s;
    return c;
}

ClassSpec ClassSpec::kpq(int k, int p, int q)
{
    ClassSpec c;
    c.k = k;
    c.pq = std::make_pair(std::min(p, q), std::max(p, q));
    return c;
}

std::string ClassSpec::str() const
{
    std::ostringstream out;
    if (s)
        out << "(" << k << "," << *s << ")";
    else
        out << "(" << k << "," << pq->first << "," << pq->second << ")";
    return out.str();
}

std::string ClassVerdict::str() const
{
    if (valid())
        return "valid";
    std::string out = "invalid:";
    for (const auto& v : violations)
        out += " [" + v + "]";
    return out;
}

int surplus_of(const CnfFormula& f, int k, const ClassSpec& cls)
{
    // Occurrences inside below-width clauses, per literal.
    std::map<Lit, int> below;
    for (const Clause& c : f)
        if ((int)c.size() < k)
            for (Lit l : c)
                below[l]++;

    OccurrenceProfile prof = degrees(f);
    int total = 0;
    if (cls.s) {
        for (const auto& [v, d] : prof.vars) {
            int doubled = d.total();
            auto ip = below.find(v);
            auto in = below.find(-v);
            if (ip != below.end())
                doubled += ip->second;
            if (in != below.end())
                doubled += in->second;
            total += std::max(0, doubled - *cls.s);
        }
    } else {
        auto [p, q] = *cls.pq;
        for (const auto& [v, d] : prof.vars) {
            int dpos = d.pos, dneg = d.neg;
            auto ip = below.find(v);
            auto in = below.find(-v);
            if (ip != below.end())
                dpos += ip->second;
            if (in != below.end())
                dneg += in->second;
            // Polarity swap allowed per variable; charge the cheaper orientation.
            int a = std::max(0, dpos - p) + std::max(0, dneg - q);
            int b = std::max(0, dpos - q) + std::max(0, dneg - p);
            total += std::min(a, b);
        }
    }
    return total;
}

ClassVerdict validate_class(const CnfFormula& f, const ClassSpec& cls,
                            const std::optional<Stairway>& stairway,
                            const std::optional<int>& surplus)
{
    ClassVerdict v;
    bool width_ok = true;
    for (const Clause& c : f)
        if ((int)c.size() > cls.k) {
            v.violations.push_back("clause " + c.str() + " wider than k=" +
                                   std::to_string(cls.k));
            width_ok = false;
        }

    if (width_ok) {
        Stairway actual = stairway_of(f, cls.k);
        if (stairway) {
            if (actual != *stairway)
                v.violations.push_back("stairway is " + actual.str() + ", expected " +
                                       stairway->str());
        } else if (!actual.empty()) {
            v.violations.push_back("not a " + std::to_string(cls.k) +
                                   "-CNF: stairway " + actual.str());
        }
    }

    OccurrenceProfile prof = degrees(f);
    if (cls.s) {
        for (const auto& [var, d] : prof.vars)
            if (d.total() > *cls.s)
                v.violations.push_back("variable " + std::to_string(var) + " has degree " +
                                       std::to_string(d.total()) + " > s=" +
                                       std::to_string(*cls.s));
    } else {
        auto [p, q] = *cls.pq;
        for (const auto& [var, d] : prof.vars) {
            int lo = std::min(d.pos, d.neg), hi = std::max(d.pos, d.neg);
            if (lo > p || hi > q)
                v.violations.push_back("variable " + std::to_string(var) + " has type (" +
                                       std::to_string(d.pos) + "," + std::to_string(d.neg) +
                                       "), exceeds caps (" + std::to_string(p) + "," +
                                       std::to_string(q) + ") up to swap");
        }
    }

    if (surplus && width_ok) {
        int actual = surplus_of(f, cls.k, cls);
        if (actual != *surplus)
            v.violations.push_back("surplus is " + std::to_string(actual) + ", expected " +
                                   std::to_string(*surplus));
    }
    return v;
}

std::vector<Clause> occ(const CnfFormula& f, int v)
{
    std::vector<Clause> out;
    for (const Clause& c : f)
        if (c.contains_var(v))
            out.push_back(c);
    return out;
}

std::optional<Lit> is_blocked(const Clause& c, const CnfFormula& f)
{
    if (!f.contains(c))
        throw formula_error("is_blocked: clause " + c.str() + " is not in the formula");
    for (Lit x : c) {
        bool blocked = true;
        for (const Clause& d : f) {
            if (!d.contains(-x))
                continue;
            // Need a clash on a variable other than var(x).
            bool clash = false;
            for (Lit l : d)
                if (var_of(l) != var_of(x) && c.contains(-l)) {
                    clash = true;
                    break;
                }
            if (!clash) {
                blocked = false;
                break;
            }
        }
        if (blocked)
            return x;
    }
    return std::nullopt;
}

CnfFormula eliminate(const CnfFormula& f, int x)
{
    std::vector<Clause> pos, neg, rest;
    for (const Clause& c : f) {
        if (c.contains(x))
            pos.push_back(c);
        else if (c.contains(-x))
            neg.push_back(c);
        else
            rest.push_back(c);
    }
    if (pos.empty() && neg.empty())
        throw formula_error("eliminate: variable " + std::to_string(x) +
                            " does not occur in the formula");
    for (const Clause& cp : pos)
        for (const Clause& cn : neg) {
            std::vector<Lit> lits;
            for (Lit l : cp)
                if (l != x)
                    lits.push_back(l);
            for (Lit l : cn)
                if (l != -x)
                    lits.push_back(l);
            if (auto r = Clause::try_make(std::move(lits)))
                rest.push_back(*r);
        }
    return CnfFormula(std::move(rest));
}

CnfFormula restrict_true(const CnfFormula& f, Lit l)
{
    std::vector<Clause> out;
    for (const Clause& c : f) {
        if (c.contains(l))
            continue;
        if (c.contains(-l)) {
            std::vector<Lit> lits;
            for (Lit m : c)
                if (m != -l)
                    lits.push_back(m);
            out.push_back(Clause(std::move(lits)));
        } else {
            out.push_back(c);
        }
    }
    return CnfFormula(std::move(out));
}

long deficiency(const CnfFormula& f)
{
    return (long)f.size() - (long)f.variables().size();
}

} // namespace musat
