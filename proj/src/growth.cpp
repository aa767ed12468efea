#include "sbgrowth/growth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sbgrowth/error.hpp"

namespace sbgrowth {

LinearSystem build_system(const Automaton& automaton) {
    const int delta = automaton.delta_id();
    std::vector<const Syllable*> vars;
    for (const auto& s : automaton.syllables())
        if (s.id != delta) vars.push_back(&s);

    const EpsilonMatrix eps = automaton.epsilon();
    LinearSystem sys;
    sys.A.assign(vars.size(), std::vector<RationalFunction>(vars.size()));
    for (std::size_t i = 0; i < vars.size(); ++i) {
        const Syllable& row = *vars[i];
        if (eps(row.id, delta))
            throw Error(ErrorCode::InvalidArgument, "fundamental braid admitted as a predecessor");
        const Polynomial tl = Polynomial::monomial(row.length);
        for (std::size_t j = 0; j < vars.size(); ++j) {
            Polynomial entry;
            if (eps(row.id, vars[j]->id)) entry += tl;
            if (i == j) entry -= Polynomial{1};
            sys.A[i][j] = RationalFunction(entry);
        }
        sys.rhs.emplace_back(-tl);
        sys.labels.push_back(row.id);
    }
    return sys;
}

LinearSystem build_system(int n, MonoidKind kind, int max_strands) {
    return build_system(Automaton(n, kind, max_strands));
}

GeneratingFunction generating_function(const Automaton& automaton) {
    const LinearSystem sys = build_system(automaton);
    const std::vector<RationalFunction> f = solve_linear_system(sys);

    GeneratingFunction gf;
    gf.n = automaton.strands();
    gf.kind = automaton.kind();
    RationalFunction partial = RationalFunction::constant(1);
    for (std::size_t i = 0; i < f.size(); ++i) {
        gf.per_syllable.emplace(sys.labels[i], f[i]);
        partial += f[i];
    }
    const Polynomial tl = Polynomial::monomial(automaton.delta_length());
    const RationalFunction one_minus_tl(Polynomial{1} - tl);
    gf.per_syllable.emplace(automaton.delta_id(), RationalFunction(tl) * partial / one_minus_tl);
    gf.rf = partial / one_minus_tl;
    return gf;
}

GeneratingFunction generating_function(int n, MonoidKind kind, int max_strands) {
    return generating_function(Automaton(n, kind, max_strands));
}

namespace {

int sign_of(const mpq_class& v) { return sgn(v); }

std::vector<Polynomial> sturm_sequence(const Polynomial& f) {
    std::vector<Polynomial> seq{f, f.derivative()};
    while (!seq.back().is_zero()) {
        Polynomial r = divrem(seq[seq.size() - 2], seq.back()).second;
        if (r.is_zero()) break;
        // Positive rescaling keeps signs and tames coefficient growth.
        seq.push_back(-Polynomial::from_integers(r.integer_coefficients()));
    }
    return seq;
}

int sign_changes(const std::vector<Polynomial>& seq, const mpq_class& x) {
    int changes = 0;
    int last = 0;
    for (const auto& p : seq) {
        int s = sign_of(p.eval_at(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

/// Yun's algorithm: factors[i] is squarefree and its roots have multiplicity i+1.
std::vector<Polynomial> squarefree_factors(const Polynomial& p) {
    std::vector<Polynomial> factors;
    Polynomial dp = p.derivative();
    Polynomial a = gcd(p, dp);
    Polynomial b = divrem(p, a).first;
    Polynomial c = divrem(dp, a).first;
    Polynomial d = c - b.derivative();
    while (b.degree() > 0) {
        Polynomial ai = gcd(b, d);
        Polynomial nb = divrem(b, ai).first;
        c = divrem(d, ai).first;
        d = c - nb.derivative();
        factors.push_back(ai);
        b = nb;
    }
    return factors;
}

mpq_class cauchy_bound(const Polynomial& p) {
    mpq_class m = 0;
    for (int i = 0; i < p.degree(); ++i) m = std::max(m, mpq_class(abs(p[i] / p.leading())));
    return m + 1;
}

mpf_class polish(const Polynomial& f, const RealRoot& root) {
    const mp_bitcnt_t prec = kRootPrecision;
    const Polynomial df = f.derivative();
    mpf_class lo(root.lo, prec);
    mpf_class hi(root.hi, prec);
    mpf_class x = (lo + hi) / 2;
    if (root.lo == root.hi) return x;
    for (int iter = 0; iter < 64; ++iter) {
        mpf_class fx = f.eval_real(x);
        mpf_class dfx = df.eval_real(x);
        if (dfx == 0) break;
        mpf_class next = x - fx / dfx;
        if (next < lo || next > hi) break;
        mpf_class step = abs(mpf_class(next - x, prec));
        x = next;
        if (step == 0 || step < abs(x) * mpf_class(1e-70, prec)) break;
    }
    return x;
}

}  // namespace

int sturm_count(const Polynomial& squarefree, const mpq_class& lo, const mpq_class& hi) {
    auto seq = sturm_sequence(squarefree);
    return sign_changes(seq, lo) - sign_changes(seq, hi);
}

std::vector<RealRoot> isolate_real_roots(const Polynomial& p, double tol) {
    if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "roots of the zero polynomial");
    if (!(tol > 0)) throw Error(ErrorCode::InvalidArgument, "root tolerance must be positive");
    const mpq_class width(tol);
    std::vector<RealRoot> roots;
    const auto factors = squarefree_factors(p.monic());
    for (std::size_t mult = 0; mult < factors.size(); ++mult) {
        const Polynomial& f = factors[mult];
        if (f.degree() < 1) continue;
        const auto seq = sturm_sequence(f);
        const mpq_class bound = cauchy_bound(f);
        struct Span {
            mpq_class lo, hi;
            int count;
        };
        std::vector<Span> work{{-bound, bound, sign_changes(seq, -bound) - sign_changes(seq, bound)}};
        while (!work.empty()) {
            Span s = work.back();
            work.pop_back();
            if (s.count == 0) continue;
            if (s.count == 1) {
                while (s.hi - s.lo > width) {
                    mpq_class mid = (s.lo + s.hi) / 2;
                    if (sign_changes(seq, s.lo) - sign_changes(seq, mid) == 1) s.hi = mid;
                    else s.lo = mid;
                }
                RealRoot r;
                r.lo = s.lo;
                r.hi = s.hi;
                if (f.eval_at(s.hi) == 0) r.lo = s.hi;
                r.multiplicity = static_cast<int>(mult) + 1;
                r.value = polish(f, r);
                roots.push_back(std::move(r));
                continue;
            }
            mpq_class mid = (s.lo + s.hi) / 2;
            int left = sign_changes(seq, s.lo) - sign_changes(seq, mid);
            work.push_back({mid, s.hi, s.count - left});
            work.push_back({s.lo, mid, left});
        }
    }
    std::sort(roots.begin(), roots.end(), [](const RealRoot& a, const RealRoot& b) { return a.value < b.value; });
    return roots;
}

CubicAnalysis cubic_analysis(const Polynomial& cubic) {
    if (cubic.degree() != 3) throw Error(ErrorCode::NotCubic, "cubic analysis needs a degree-3 polynomial");
    const mpq_class a = cubic[3], b = cubic[2], c = cubic[1], d = cubic[0];
    CubicAnalysis out;
    out.shift = -b / (3 * a);
    out.p = (3 * a * c - b * b) / (3 * a * a);
    out.q = (2 * b * b * b - 9 * a * b * c + 27 * a * a * d) / (27 * a * a * a);
    out.discriminant_expr = out.q * out.q / 4 + out.p * out.p * out.p / 27;
    if (out.discriminant_expr < 0) out.root_count = 3;
    else if (out.discriminant_expr > 0) out.root_count = 1;
    else out.root_count = out.p == 0 ? 1 : 2;

    if (out.root_count == 3) {
        const double p = out.p.get_d();
        const double q = out.q.get_d();
        const double amp = 2.0 * std::sqrt(-p / 3.0);
        const double theta = std::acos(3.0 * q / (2.0 * p) * std::sqrt(-3.0 / p));
        for (int k = 0; k < 3; ++k)
            out.trig_roots.push_back(amp * std::cos(theta / 3.0 - 2.0 * std::numbers::pi * k / 3.0) +
                                     out.shift.get_d());
        std::sort(out.trig_roots.begin(), out.trig_roots.end());
        const auto isolated = isolate_real_roots(cubic);
        for (std::size_t i = 0; i < 3 && i < isolated.size(); ++i)
            out.trig_mismatch = std::max(out.trig_mismatch, std::abs(out.trig_roots[i] - isolated[i].approx()));
    }
    return out;
}

GrowthReport growth_report(const RationalFunction& rf, double tol) {
    GrowthReport rep;
    rep.denominator = rf.den();
    rep.recurrence = recurrence_from(rf);
    if (rep.denominator.degree() >= 1) rep.real_roots = isolate_real_roots(rep.denominator, tol);

    for (const auto& r : rep.real_roots) {
        if (r.value > 0) {
            rep.growth_rate = mpf_class(1, kRootPrecision) / r.value;
            break;
        }
    }

    int real_total = 0;
    bool simple = true;
    for (const auto& r : rep.real_roots) {
        real_total += r.multiplicity;
        simple = simple && r.multiplicity == 1;
    }
    if (rep.denominator.degree() < 1) {
        rep.residue_note = "no poles";
    } else if (!simple) {
        rep.residue_note = "repeated pole";
    } else if (real_total != rep.denominator.degree()) {
        rep.residue_note = "non-real poles";
    } else {
        const Polynomial dden = rep.denominator.derivative();
        for (const auto& r : rep.real_roots) {
            Residue res;
            res.pole = r.value;
            res.coefficient = rf.num().eval_real(r.value) / -dden.eval_real(r.value);
            rep.residues.push_back(std::move(res));
        }
        rep.has_residues = true;
    }

    Polynomial rest = rep.denominator;
    const Polynomial one_minus_t{1, -1};
    while (rest.degree() > 3) {
        auto [q, r] = divrem(rest, one_minus_t);
        if (!r.is_zero()) break;
        rest = q;
    }
    if (rest.degree() == 3) rep.cubic = cubic_analysis(rest);
    return rep;
}

}  // namespace sbgrowth
