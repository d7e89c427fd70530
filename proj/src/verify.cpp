#include "fmethod/verify.hpp"

#include <random>

namespace fmethod {

DiffOperator emit_operator(const FSetting& s, const SingularVector& sv) {
    DiffOperator d;
    d.degree = sv.degree;
    d.op = symb_inv(sv.psi, s.coord_vars);
    d.restriction = s.restriction;
    d.sub_coord_vars = s.sub_coord_vars;
    d.nu = sv.nu;
    return d;
}

FiberPoly restrict_poly(const FiberPoly& f, const std::vector<MPoly>& images) {
    if (images.size() != f.vars().size())
        throw StructuralError("restrict_poly: one image per variable required");
    std::vector<std::string> small =
        images.empty() ? std::vector<std::string>{} : images[0].vars();
    FiberPoly out(small, f.params(), f.fiber_rows(), f.fiber_cols());
    for (const auto& [e, m] : f.terms()) {
        MPoly factor = MPoly::constant(small, BigRat(1));
        for (size_t v = 0; v < e.size(); ++v)
            if (e[v]) factor *= images[v].pow(e[v]);
        for (const auto& [e2, c2] : factor.terms()) {
            FiberMatrix scaled = m;
            scaled.scale(RatFunc::constant(f.params(), c2));
            out.add_term(e2, scaled);
        }
    }
    return out;
}

namespace {

// Deterministic small nonzero rationals for parameter specialization.
std::map<std::string, BigRat> draw_sample(const std::vector<std::string>& params,
                                          std::mt19937_64& rng) {
    std::map<std::string, BigRat> out;
    for (const auto& p : params) {
        long num = 1 + static_cast<long>(rng() % 9);
        long den = 1 + static_cast<long>(rng() % 3);
        out[p] = BigRat(num, den);
    }
    return out;
}

struct SpecializedSide {
    std::vector<WeylElement> big;   // dpi_lambda per subalgebra basis element
    std::vector<WeylElement> small; // dpi_nu per subalgebra basis element
    WeylElement op;
};

SpecializedSide specialize_all(const FSetting& s, const DiffOperator& d,
                               const std::map<std::string, BigRat>& sample) {
    SpecializedSide side;
    side.op = d.op.specialize(sample);

    std::map<std::string, MPoly> lam_vals;
    for (size_t i = 0; i < s.algebra.dim(); ++i)
        if (s.algebra.grade(i) == 0) {
            const std::string& name = s.algebra.basis(i).name;
            lam_vals.emplace(name,
                             MPoly::constant({}, s.lambda.value(name).eval(sample)));
        }
    RepWeight lam({}, std::move(lam_vals));

    std::map<std::string, MPoly> nu_vals;
    for (size_t k = 0; k < s.sub_algebra.dim(); ++k)
        if (s.sub_algebra.grade(k) == 0) {
            const std::string& name = s.sub_algebra.basis(k).name;
            nu_vals.emplace(name, MPoly::constant({}, d.nu.value(name).eval(sample)));
        }
    RepWeight nu({}, std::move(nu_vals));

    const auto& sub = s.algebra.sub();
    for (size_t k = 0; k < sub.names.size(); ++k) {
        side.big.push_back(
            dpi(s.algebra, lam, s.algebra.combo_vec(sub.combos[k], s.coord_vars), s.coord_vars));
        side.small.push_back(dpi(s.sub_algebra, nu, s.sub_algebra.basis_vec(k, d.sub_coord_vars),
                                 d.sub_coord_vars));
    }
    return side;
}

// Residual of the intertwining identity on one test polynomial; zero iff the
// identity holds on it.
FiberPoly residual(const SpecializedSide& side, const std::vector<MPoly>& restriction, size_t gen,
                   const FiberPoly& f) {
    FiberPoly lhs = restrict_poly(apply(side.op, apply(side.big[gen], f)), restriction);
    FiberPoly rhs = apply(side.small[gen], restrict_poly(apply(side.op, f), restriction));
    return lhs - rhs;
}

std::vector<FiberPoly> test_monomials(const FSetting& s, uint32_t test_degree) {
    std::vector<FiberPoly> fs;
    for (uint32_t deg = 0; deg <= test_degree; ++deg)
        for (const auto& e : homogeneous_monomials(s.coord_vars.size(), deg))
            fs.push_back(FiberPoly::monomial(s.coord_vars, e,
                                             FiberMatrix::scalar(RatFunc::constant({}, BigRat(1)))));
    return fs;
}

// Perturbations that must break the identity on the test set.  A bumped
// coefficient needs at least two terms (on one term it only rescales, which
// still intertwines); the grafted term sits one order BELOW the operator so
// the low-degree test monomials can see it, and mixing orders always breaks
// the homogeneity the target weight forces.
std::vector<WeylElement> perturbations(const WeylElement& op, size_t nvars) {
    std::vector<WeylElement> out;
    if (op.terms().size() >= 2) {
        WeylElement p = op;
        ExpVec z(nvars, 0);
        p.add_term(z, op.terms().begin()->first.d,
                   FiberMatrix::scalar(RatFunc::constant({}, BigRat(1))));
        out.push_back(std::move(p));
    }
    {
        WeylElement p = op;
        ExpVec z(nvars, 0), d(nvars, 0);
        if (op.order() == 0) {
            d[0] = 1;
        } else {
            d = op.terms().begin()->first.d;
            for (size_t v = 0; v < nvars; ++v)
                if (d[v]) {
                    --d[v];
                    break;
                }
        }
        p.add_term(z, d, FiberMatrix::scalar(RatFunc::constant({}, BigRat(1))));
        out.push_back(std::move(p));
    }
    return out;
}

std::string describe_monomial(const FiberPoly& f) { return f.to_string(); }

} // namespace

EquivarianceReport verify_equivariance(const FSetting& s, const DiffOperator& d,
                                       const EquivarianceOptions& opt) {
    EquivarianceReport rep;
    std::mt19937_64 rng(opt.seed);
    const auto& sub_names = s.algebra.sub().names;
    // Test monomials must reach past the operator's order or the whole
    // identity degenerates to 0 == 0.
    std::vector<FiberPoly> fs = test_monomials(s, opt.test_degree + d.op.order());

    for (size_t si = 0; si < opt.samples; ++si) {
        auto sample = draw_sample(s.params, rng);
        SpecializedSide side = specialize_all(s, d, sample);
        for (size_t g = 0; g < sub_names.size(); ++g)
            for (const auto& f : fs) {
                FiberPoly r = residual(side, d.restriction, g, f);
                ++rep.checks;
                if (!r.is_zero()) {
                    rep.detail = cat("identity fails for generator '", sub_names[g],
                                     "' on ", describe_monomial(f), " at sample ", si);
                    return rep;
                }
            }

        if (opt.negative_controls) {
            for (WeylElement& p : perturbations(side.op, s.coord_vars.size())) {
                ++rep.controls_expected;
                SpecializedSide broken = side;
                broken.op = std::move(p);
                bool tripped = false;
                for (size_t g = 0; g < sub_names.size() && !tripped; ++g)
                    for (const auto& f : fs) {
                        if (!residual(broken, d.restriction, g, f).is_zero()) {
                            tripped = true;
                            break;
                        }
                    }
                if (tripped) {
                    ++rep.controls_failed;
                } else {
                    rep.detail = cat("a perturbed operator still intertwines at sample ", si);
                    return rep;
                }
            }
        }
    }
    rep.passed = true;
    return rep;
}

ComparisonReport compare_rankin_cohen(const FSetting& s, const SingularVector& sv) {
    if (s.name != "rankin_cohen")
        throw DomainError("compare_rankin_cohen: wrong setting");
    const uint32_t n = sv.degree;
    FiberPoly expected(s.dual_vars, s.params, 1, 1);
    for (uint32_t j = 0; j <= n; ++j) {
        BigRat c = rat_binomial(n, j);
        if (j % 2 == 1) c = -c;
        // Weights from the stored bundle weight, so pinned parameters work.
        MPoly k1 = s.lambda.value("h1");
        MPoly k2 = s.lambda.value("h2");
        MPoly coeff = MPoly::constant(s.params, c);
        for (uint32_t i = 0; i < j; ++i)
            coeff *= k1 + MPoly::constant(s.params, BigRat(static_cast<long>(n - j + i)));
        for (uint32_t i = 0; i + j < n; ++i)
            coeff *= k2 + MPoly::constant(s.params, BigRat(static_cast<long>(j + i)));
        ExpVec e = {n - j, j}; // zeta1 exponent first
        expected.add_term(e, FiberMatrix::scalar(RatFunc{coeff}));
    }
    ComparisonReport rep;
    // Proportionality by cross-multiplication: psi * b0 == expected * a0.
    if (sv.psi.terms().empty() || expected.terms().empty()) {
        rep.detail = "empty candidate or reference";
        return rep;
    }
    const auto& [e0, a0m] = *sv.psi.terms().begin();
    RatFunc a0 = a0m.scalar_value();
    RatFunc b0 = expected.coeff(e0).scalar_value();
    FiberPoly lhs = sv.psi;
    lhs.scale(b0);
    FiberPoly rhs = expected;
    rhs.scale(a0);
    if (lhs == rhs && !b0.is_zero()) {
        rep.matched = true;
    } else {
        rep.detail = cat("expected proportional to ", expected.to_string(), ", got ",
                         sv.psi.to_string());
    }
    return rep;
}

ComparisonReport compare_juhl(const FSetting& s, const SingularVector& sv) {
    if (s.name != "juhl") throw DomainError("compare_juhl: wrong setting");
    const uint32_t d = sv.degree;
    if (d % 2 != 0)
        throw UnsupportedError("compare_juhl: no classical family at odd degree");
    const size_t n = s.dual_vars.size();
    MPoly lap = s.lambda.value("E"); // 2*lambda; survives pinned parameters
    lap.scale(BigRat(2));

    MPoly delta_prime(s.dual_vars);
    for (size_t i = 0; i + 1 < n; ++i) {
        ExpVec e(n, 0);
        e[i] = 2;
        delta_prime += MPoly::monomial(s.dual_vars, e, BigRat(1));
    }
    FiberPoly expected(s.dual_vars, s.params, 1, 1);
    for (uint32_t j = 0; 2 * j <= d; ++j) {
        // c_j = [2^j j! (d-2j)!]^{-1} prod_{i=1}^{d/2-j} (2 lambda + d - n - 1 + 2i)
        BigRat denom = BigRat(2).pow(j) * rat_factorial(j) * rat_factorial(d - 2 * j);
        MPoly coeff = MPoly::constant(s.params, denom.inverse());
        for (uint32_t i = 1; i + j <= d / 2; ++i)
            coeff *= lap + MPoly::constant(
                               s.params, BigRat(static_cast<long>(d) - static_cast<long>(n) - 1 +
                                                2 * static_cast<long>(i)));
        MPoly mono = delta_prime.pow(j);
        ExpVec zn(n, 0);
        zn[n - 1] = d - 2 * j;
        mono *= MPoly::monomial(s.dual_vars, zn, BigRat(1));
        FiberPoly part = FiberPoly::from_scalar(mono, s.params);
        part.scale(RatFunc{coeff});
        expected += part;
    }
    ComparisonReport rep;
    if (sv.psi.terms().empty()) {
        rep.detail = "empty candidate";
        return rep;
    }
    const auto& [e0, a0m] = *sv.psi.terms().begin();
    RatFunc a0 = a0m.scalar_value();
    RatFunc b0 = expected.coeff(e0).scalar_value();
    FiberPoly lhs = sv.psi;
    lhs.scale(b0);
    FiberPoly rhs = expected;
    rhs.scale(a0);
    if (lhs == rhs && !b0.is_zero()) {
        rep.matched = true;
    } else {
        rep.detail = cat("expected proportional to ", expected.to_string(), ", got ",
                         sv.psi.to_string());
    }
    return rep;
}

} // namespace fmethod
