#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace musat {

// Literals follow the DIMACS convention: +v is the positive literal of
// variable v >= 1, -v the negative one.
using Lit = int;

inline int var_of(Lit l) { return l < 0 ? -l : l; }
inline bool is_pos(Lit l) { return l > 0; }

// Literal order: by variable, positive polarity first.
inline bool lit_less(Lit a, Lit b)
{
    int va = var_of(a), vb = var_of(b);
    if (va != vb)
        return va < vb;
    return a > b; // +v before -v
}

class formula_error : public std::runtime_error {
public:
    explicit formula_error(const std::string& what) : std::runtime_error(what) {}
};

/** A non-tautological set of literals, kept sorted by (var, sign). */
class Clause {
public:
    Clause() = default;
    explicit Clause(std::vector<Lit> lits);
    Clause(std::initializer_list<Lit> lits) : Clause(std::vector<Lit>(lits)) {}

    // Sorts and deduplicates; returns nullopt if the literal set is tautological.
    static std::optional<Clause> try_make(std::vector<Lit> lits);

    const std::vector<Lit>& lits() const { return lits_; }
    std::size_t size() const { return lits_.size(); }
    bool empty() const { return lits_.empty(); }
    bool contains(Lit l) const;
    bool contains_var(int v) const;

    auto begin() const { return lits_.begin(); }
    auto end() const { return lits_.end(); }

    bool operator==(const Clause& o) const { return lits_ == o.lits_; }
    bool operator!=(const Clause& o) const { return lits_ != o.lits_; }
    bool operator<(const Clause& o) const;

    std::string str() const;

private:
    std::vector<Lit> lits_;
};

/** A finite set of clauses; structural equality via canonical clause order. */
class CnfFormula {
public:
    CnfFormula() = default;
    explicit CnfFormula(std::vector<Clause> clauses);

    const std::vector<Clause>& clauses() const { return clauses_; }
    std::size_t size() const { return clauses_.size(); }
    bool empty() const { return clauses_.empty(); }
    bool contains(const Clause& c) const;

    auto begin() const { return clauses_.begin(); }
    auto end() const { return clauses_.end(); }

    std::vector<int> variables() const;     // sorted, distinct
    int max_var() const;                    // 0 when no variables
    std::size_t width() const;              // widest clause, 0 if empty

    CnfFormula with_clause(const Clause& c) const;
    CnfFormula without_clause(const Clause& c) const;

    bool operator==(const CnfFormula& o) const { return clauses_ == o.clauses_; }
    bool operator!=(const CnfFormula& o) const { return clauses_ != o.clauses_; }

    std::string str() const;

private:
    std::vector<Clause> clauses_;
};

/** Per-variable and per-literal occurrence counts. */
struct OccurrenceProfile {
    struct VarDeg {
        int pos = 0;
        int neg = 0;
        int total() const { return pos + neg; }
    };
    std::map<int, VarDeg> vars;

    int vdeg(int v) const;
    int ldeg(Lit l) const;
    bool empty() const { return vars.empty(); }
};

OccurrenceProfile degrees(const CnfFormula& f);

/** Non-increasing sequence of width deficits (k - |C|) of below-width clauses. */
class Stairway {
public:
    Stairway() = default;
    explicit Stairway(std::vector<int> entries); // sorts non-increasing; entries must be >= 1

    const std::vector<int>& entries() const { return entries_; }
    std::size_t length() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    int sum() const;

    bool operator==(const Stairway& o) const { return entries_ == o.entries_; }
    bool operator!=(const Stairway& o) const { return entries_ != o.entries_; }
    bool operator<(const Stairway& o) const { return entries_ < o.entries_; }

    std::string str() const; // "(a1,a2,...)"
    static Stairway parse(const std::string& text);
    static Stairway ones(int count) { return Stairway(std::vector<int>(count, 1)); }

private:
    std::vector<int> entries_;
};

Stairway stairway_of(const CnfFormula& f, int k);

/** Occurrence-bound class: (k,s) or (k,p,q). */
struct ClassSpec {
    int k = 0;
    std::optional<int> s;                  // total occurrence cap
    std::optional<std::pair<int, int>> pq; // per-polarity caps, normalized p <= q

    static ClassSpec ks(int k, int s);
    static ClassSpec kpq(int k, int p, int q);

    int occurrence_cap() const { return s ? *s : pq->first + pq->second; }
    std::string str() const;
};

struct ClassVerdict {
    std::vector<std::string> violations;
    bool valid() const { return violations.empty(); }
    std::string str() const;
};

// Checks width (exact k when no stairway given, otherwise the stairway must
// match), occurrence caps (with the per-variable polarity swap for (k,p,q)),
// and the double-counting surplus when requested.
ClassVerdict validate_class(const CnfFormula& f, const ClassSpec& cls,
                            const std::optional<Stairway>& stairway = std::nullopt,
                            const std::optional<int>& surplus = std::nullopt);

// Total cap excess when every literal occurrence in a below-k-width clause
// counts twice. Variable-cap classes sum per variable, literal-cap classes
// per literal with the polarity orientation chosen per variable.
int surplus_of(const CnfFormula& f, int k, const ClassSpec& cls);

/** Blocking literal of c in f, or nullopt. Throws if c is not in f. */
std::optional<Lit> is_blocked(const Clause& c, const CnfFormula& f);

/** All clauses of f in which variable v occurs. */
std::vector<Clause> occ(const CnfFormula& f, int v);

/** DP-resolution: removes occ(f,x) and adds all non-tautological resolvents on x. */
CnfFormula eliminate(const CnfFormula& f, int x);

/** Assigns l := true: drops clauses containing l, strips ~l from the rest. */
CnfFormula restrict_true(const CnfFormula& f, Lit l);

/** |clauses| - |variables|. */
long deficiency(const CnfFormula& f);

} // namespace musat
