#include "szego/roots.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <utility>

#include "szego/error.hpp"

namespace szego {

namespace {

// Scale by a positive rational so coefficients become coprime integers.
// Positive scaling preserves every sign a Sturm chain ever looks at while
// keeping remainder arithmetic compact.
Polynomial normalize_content(const Polynomial& p) {
    BigInt num_gcd = 0;
    BigInt den_lcm = 1;
    for (const Rational& c : p.coeffs()) {
        if (c.is_zero()) continue;
        num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::numerator(c));
        den_lcm = boost::multiprecision::lcm(den_lcm, boost::multiprecision::denominator(c));
    }
    if (num_gcd.is_zero()) return p;
    if (num_gcd < 0) num_gcd = -num_gcd;
    return scale(p, make_rational(den_lcm, num_gcd));
}

Polynomial squarefree_part(const Polynomial& p) {
    const Polynomial t = p.trimmed();
    if (t.effective_degree() < 1) return t;
    const Polynomial g = monic_gcd(t, derivative(t));
    if (g.effective_degree() == 0) return t;
    std::optional<Polynomial> part = exact_divide(t, g);
    if (!part) throw invariant_violation("squarefree_part: gcd does not divide");
    return *part;
}

int sign_at_plus_infinity(const Polynomial& p) { return sign_of(p.leading_coeff()); }

int sign_at_minus_infinity(const Polynomial& p) {
    const int s = sign_of(p.leading_coeff());
    return p.effective_degree() % 2 == 0 ? s : -s;
}

int variations(const std::vector<int>& signs) {
    int count = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

int variations_at(const SturmChain& chain, const Endpoint& x) {
    std::vector<int> signs;
    signs.reserve(chain.sequence.size());
    for (const Polynomial& e : chain.sequence) {
        if (x.is_minus_infinity()) {
            signs.push_back(sign_at_minus_infinity(e));
        } else if (x.is_plus_infinity()) {
            signs.push_back(sign_at_plus_infinity(e));
        } else {
            signs.push_back(sign_of(evaluate(e, x.value())));
        }
    }
    return variations(signs);
}

// Distinct roots of the chain's polynomial in (lo, hi]. Exact even when an
// endpoint is a root: with zero signs skipped, the variation count at a
// point x equals the count "just right of x", so differencing yields the
// half-open count without any nudging.
int chain_count(const SturmChain& chain, const Endpoint& lo, const Endpoint& hi) {
    return variations_at(chain, lo) - variations_at(chain, hi);
}

SturmChain chain_of_squarefree(const Polynomial& f) {
    SturmChain chain;
    chain.sequence.push_back(normalize_content(f));
    if (f.effective_degree() >= 1) {
        chain.sequence.push_back(normalize_content(derivative(f)));
        while (chain.sequence.back().effective_degree() >= 1) {
            const size_t k = chain.sequence.size();
            Polynomial r =
                divmod(chain.sequence[k - 2], chain.sequence[k - 1]).remainder;
            if (r.is_zero()) break;  // only at a constant tail for square-free input
            chain.sequence.push_back(normalize_content(negate(r)));
        }
    }
    return chain;
}

// --- isolation ---------------------------------------------------------------

// Working record for one distinct root during isolation and refinement:
// the owning square-free factor and its chain stay attached so the interval
// can be re-bisected at any point.
struct WorkEntry {
    IsolatingInterval location;
    int multiplicity;
    const Polynomial* factor;
    const SturmChain* chain;
};

// One bisection step on an interval known to hold exactly one distinct root
// of *e.factor. Exact midpoint roots collapse the entry to a point.
void bisect_entry(WorkEntry& e) {
    if (e.location.is_point()) {
        throw invariant_violation("bisect_entry: cannot shrink a point");
    }
    const Rational m = (e.location.lo + e.location.hi) / 2;
    if (evaluate(*e.factor, m).is_zero()) {
        e.location = IsolatingInterval::point(m);
        return;
    }
    const int left = chain_count(*e.chain, Endpoint::at(e.location.lo), Endpoint::at(m));
    if (left == 1) {
        e.location = IsolatingInterval(e.location.lo, m);
    } else {
        e.location = IsolatingInterval(m, e.location.hi);
    }
}

// Isolating intervals for all real roots of a square-free factor, each
// sign-definite (a point, or an interval not straddling 0). Requires the
// factor's real roots to be exactly countable by its chain; the caller has
// already verified hyperbolicity.
std::vector<IsolatingInterval> isolate_factor(const Polynomial& factor) {
    std::vector<IsolatingInterval> out;
    Polynomial f = factor.trimmed();
    if (f.effective_degree() >= 1 && f.coeff(0).is_zero()) {
        out.push_back(IsolatingInterval::point(0));
        std::vector<Rational> shifted(f.coeffs().begin() + 1, f.coeffs().end());
        f = Polynomial(std::move(shifted), f.effective_degree() - 1);
    }
    const int d = f.effective_degree();
    if (d == 0) return out;
    if (d == 1) {
        out.push_back(IsolatingInterval::point(-f.coeff(0) / f.coeff(1)));
        return out;
    }

    const SturmChain chain = chain_of_squarefree(f);
    const Rational bound = cauchy_root_bound(f);

    // Stack frames cover (lo, hi]; `right_endpoint_emitted` marks frames whose
    // hi is a root already reported as a point, so the frame owns one root
    // fewer than the raw count and must keep splitting until the foreign
    // endpoint falls away.
    struct Frame {
        Rational lo, hi;
        bool right_endpoint_emitted;
    };
    std::vector<Frame> stack{{-bound, bound, false}};
    std::vector<IsolatingInterval> raw_intervals;

    while (!stack.empty()) {
        Frame fr = stack.back();
        stack.pop_back();
        const int raw =
            chain_count(chain, Endpoint::at(fr.lo), Endpoint::at(fr.hi));
        const int owned = raw - (fr.right_endpoint_emitted ? 1 : 0);
        if (owned == 0) continue;
        if (owned == 1 && !fr.right_endpoint_emitted) {
            raw_intervals.emplace_back(fr.lo, fr.hi);
            continue;
        }
        const Rational m = (fr.lo + fr.hi) / 2;
        if (evaluate(f, m).is_zero()) {
            out.push_back(IsolatingInterval::point(m));
            stack.push_back({fr.lo, m, true});
            stack.push_back({m, fr.hi, fr.right_endpoint_emitted});
        } else {
            stack.push_back({fr.lo, m, false});
            stack.push_back({m, fr.hi, fr.right_endpoint_emitted});
        }
    }

    // Sign-definiteness: split any straddling interval at 0 (0 is not a root
    // of f here, so the chain count decides the side exactly).
    for (IsolatingInterval& iv : raw_intervals) {
        if (sign_of(iv.lo) < 0 && sign_of(iv.hi) > 0) {
            const int left = chain_count(chain, Endpoint::at(iv.lo), Endpoint::at(0));
            iv = left == 1 ? IsolatingInterval(iv.lo, 0) : IsolatingInterval(0, iv.hi);
        }
    }
    out.insert(out.end(), raw_intervals.begin(), raw_intervals.end());
    return out;
}

struct FactorData {
    Polynomial factor;
    SturmChain chain;
    int exponent;
    std::vector<IsolatingInterval> locations;
};

}  // namespace

bool Endpoint::operator<(const Endpoint& other) const {
    if (kind_ != other.kind_) {
        return static_cast<int>(kind_) < static_cast<int>(other.kind_);
    }
    return kind_ == Kind::finite && value_ < other.value_;
}

SturmChain sturm_chain(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("sturm_chain: zero polynomial");
    return chain_of_squarefree(squarefree_part(p));
}

int count_distinct_real_roots(const Polynomial& p, const Endpoint& lo, const Endpoint& hi) {
    if (p.is_zero()) {
        throw std::invalid_argument("count_distinct_real_roots: zero polynomial");
    }
    if (!(lo < hi)) {
        throw std::invalid_argument("count_distinct_real_roots: empty interval");
    }
    return chain_count(sturm_chain(p), lo, hi);
}

int count_distinct_real_roots(const Polynomial& p) {
    return count_distinct_real_roots(p, Endpoint::minus_infinity(),
                                     Endpoint::plus_infinity());
}

bool is_hyperbolic(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("is_hyperbolic: zero polynomial");
    const SturmChain chain = sturm_chain(p);
    const int distinct =
        chain_count(chain, Endpoint::minus_infinity(), Endpoint::plus_infinity());
    return distinct == chain.sequence.front().effective_degree();
}

std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial& p) {
    if (p.is_zero()) {
        throw std::invalid_argument("squarefree_decomposition: zero polynomial");
    }
    Polynomial f = p.trimmed();
    std::vector<SquarefreeFactor> result;
    if (f.effective_degree() == 0) return result;
    f = scale(f, Rational(1) / f.leading_coeff());

    const auto divide = [](const Polynomial& a, const Polynomial& b) {
        std::optional<Polynomial> q = exact_divide(a, b);
        if (!q) throw invariant_violation("squarefree_decomposition: inexact division");
        return *q;
    };

    const Polynomial df = derivative(f);
    const Polynomial a0 = monic_gcd(f, df);
    Polynomial b = divide(f, a0);
    Polynomial d = subtract(divide(df, a0), derivative(b));
    int exponent = 1;
    while (b.effective_degree() > 0) {
        const Polynomial a = monic_gcd(b, d);
        b = divide(b, a);
        d = subtract(divide(d, a), derivative(b));
        if (a.effective_degree() > 0) {
            result.push_back(SquarefreeFactor{a, exponent});
        }
        ++exponent;
    }
    return result;
}

Rational cauchy_root_bound(const Polynomial& p) {
    if (p.is_zero()) {
        throw std::invalid_argument("cauchy_root_bound: zero polynomial");
    }
    const int d = p.effective_degree();
    Rational max_ratio = 0;
    for (int i = 0; i < d; ++i) {
        Rational ratio = p.coeff(i) / p.coeff(d);
        if (ratio < 0) ratio = -ratio;
        if (ratio > max_ratio) max_ratio = ratio;
    }
    return max_ratio + 1;
}

MultiplicityStructure multiplicity_structure(const Polynomial& p) {
    if (p.is_zero()) {
        throw std::invalid_argument("multiplicity_structure: zero polynomial");
    }
    std::vector<FactorData> factors;
    for (SquarefreeFactor& sf : squarefree_decomposition(p)) {
        FactorData data{std::move(sf.factor), {}, sf.exponent, {}};
        data.chain = chain_of_squarefree(data.factor);
        factors.push_back(std::move(data));
    }

    int deficit = 0;
    for (const FactorData& fd : factors) {
        const int real = chain_count(fd.chain, Endpoint::minus_infinity(),
                                     Endpoint::plus_infinity());
        deficit += fd.exponent * (fd.factor.effective_degree() - real);
    }
    if (deficit > 0) {
        std::ostringstream msg;
        msg << "polynomial has " << deficit
            << " non-real roots (counted with multiplicity)";
        throw non_hyperbolic_error(msg.str(), deficit);
    }

    std::vector<WorkEntry> entries;
    for (FactorData& fd : factors) {
        fd.locations = isolate_factor(fd.factor);
        for (const IsolatingInterval& iv : fd.locations) {
            entries.push_back(WorkEntry{iv, fd.exponent, &fd.factor, &fd.chain});
        }
    }

    // Global separation: factors are coprime, so repeated bisection of any
    // offending pair terminates with strictly ordered locations.
    bool clean = false;
    while (!clean) {
        std::sort(entries.begin(), entries.end(),
                  [](const WorkEntry& a, const WorkEntry& b) {
                      if (a.location.lo != b.location.lo) {
                          return a.location.lo < b.location.lo;
                      }
                      return a.location.hi < b.location.hi;
                  });
        clean = true;
        for (size_t i = 0; i + 1 < entries.size(); ++i) {
            WorkEntry& a = entries[i];
            WorkEntry& b = entries[i + 1];
            if (strictly_ordered(a.location, b.location)) continue;
            clean = false;
            if (a.location.is_point() && b.location.is_point()) {
                throw invariant_violation(
                    "multiplicity_structure: two factors share a root");
            }
            // Shrink the wider interval (ties: the first non-point).
            const Rational wa = a.location.hi - a.location.lo;
            const Rational wb = b.location.hi - b.location.lo;
            if (!a.location.is_point() && (b.location.is_point() || wa >= wb)) {
                bisect_entry(a);
            } else {
                bisect_entry(b);
            }
        }
    }

    std::vector<RootEntry> out;
    out.reserve(entries.size());
    for (const WorkEntry& e : entries) {
        out.push_back(RootEntry{e.location, e.multiplicity});
    }
    return MultiplicityStructure(std::move(out));
}

namespace {

void require_full_degree(const Polynomial& p, const char* what) {
    if (p.is_zero()) {
        throw std::invalid_argument(std::string(what) + ": zero polynomial");
    }
    if (p.effective_degree() != p.ambient_degree()) {
        std::ostringstream msg;
        msg << what << ": effective degree " << p.effective_degree()
            << " below ambient degree " << p.ambient_degree()
            << ", root multiplicities cannot partition n";
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace

MultiplicityVector multiplicity_vector(const Polynomial& p) {
    require_full_degree(p, "multiplicity_vector");
    return multiplicity_structure(p).multiplicity_vector();
}

SignSignature sign_signature(const Polynomial& p) {
    require_full_degree(p, "sign_signature");
    // Counting by sign class needs no isolation: strip each factor's zero
    // root, then count negatives through the factor's own chain.
    SignSignature sig;
    int deficit = 0;
    for (const SquarefreeFactor& sf : squarefree_decomposition(p)) {
        Polynomial f = sf.factor;
        if (f.coeff(0).is_zero()) {
            sig.zero += sf.exponent;
            std::vector<Rational> shifted(f.coeffs().begin() + 1, f.coeffs().end());
            f = Polynomial(std::move(shifted), f.effective_degree() - 1);
        }
        if (f.effective_degree() == 0) continue;
        const SturmChain chain = chain_of_squarefree(f);
        const int real = chain_count(chain, Endpoint::minus_infinity(),
                                     Endpoint::plus_infinity());
        deficit += sf.exponent * (f.effective_degree() - real);
        const int neg = chain_count(chain, Endpoint::minus_infinity(), Endpoint::at(0));
        sig.negative += sf.exponent * neg;
        sig.positive += sf.exponent * (real - neg);
    }
    if (deficit > 0) {
        std::ostringstream msg;
        msg << "polynomial has " << deficit
            << " non-real roots (counted with multiplicity)";
        throw non_hyperbolic_error(msg.str(), deficit);
    }
    return sig;
}

SignedMultiplicityVector signed_multiplicity_vector(const Polynomial& p) {
    require_full_degree(p, "signed_multiplicity_vector");
    return multiplicity_structure(p).signed_multiplicity_vector();
}

}  // namespace szego
