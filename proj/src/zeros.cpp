#include "kbchroma/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace kbchroma {

double ZeroSet::max_newton_residual() const {
    double worst = 0;
    for (const auto& r : roots)
        if (!r.exact_integer) worst = std::max(worst, r.residual_newton.to_double());
    return worst;
}

bool ZeroSet::all_converged() const {
    for (const auto& r : roots)
        if (!r.converged) return false;
    return true;
}

namespace {

// Fujiwara-style bound on root moduli of a monic-normalized polynomial.
double root_radius(const RationalPoly& p) {
    const int n = p.degree();
    double an = std::abs(p.coeff(n).get_d());
    double best = 0;
    for (int k = 1; k <= n; ++k) {
        double ak = std::abs(p.coeff(n - k).get_d());
        if (ak == 0) continue;
        best = std::max(best, std::pow(ak / an, 1.0 / k));
    }
    return 2 * best + 0.5;
}

struct Horner2 {
    ApComplex p, dp;
};

Horner2 eval_with_derivative(const std::vector<ApComplex>& coeffs, const ApComplex& z) {
    const long prec = z.precision();
    ApComplex p(prec), dp(prec);
    for (size_t i = coeffs.size(); i-- > 0;) {
        dp = dp * z + p;
        p = p * z + coeffs[i];
    }
    return {p, dp};
}

// sum |a_k| |z|^k: the scale of the evaluation, bounding what accuracy the
// working precision can attain at z
ApFloat eval_scale(const std::vector<ApFloat>& abs_coeffs, const ApFloat& r) {
    ApFloat s(r.precision());
    for (size_t i = abs_coeffs.size(); i-- > 0;) s = s * r + abs_coeffs[i];
    return s;
}

// P and P' through the catalog product form sum c(z) lambda(z)^m. The
// monomial expansion is badly conditioned near the q_c root cluster (its
// coefficients reach ~2^210 for m = 20, so 256-bit Horner loses everything
// to cancellation there); the product form keeps intermediate magnitudes at
// the size of the dominant lambda^m term and stays fully accurate.
struct ProductForm {
    struct Term {
        RationalPoly c, dc, lam, dlam;
    };
    std::vector<Term> terms;
    int m;
    long prec;

    ProductForm(const Catalog& cat, int m_, long prec_) : m(m_), prec(prec_) {
        for (const auto& e : cat.entries) {
            if (!e.contributing) continue;
            terms.push_back(
                {e.coeff_poly, e.coeff_poly.derivative(), e.lambda_poly, e.lambda_poly.derivative()});
        }
    }

    // {P(z), P'(z)} plus the magnitude scale of the summed terms
    struct Value {
        ApComplex p, dp;
        ApFloat scale;
    };
    Value eval(const ApComplex& z) const {
        Value v{ApComplex(prec), ApComplex(prec), ApFloat(prec)};
        const ApComplex mfac = ApComplex::from(double(m), 0.0, prec);
        for (const auto& t : terms) {
            ApComplex lam = eval_complex(t.lam, z);
            ApComplex lpow1 = ApComplex::from(1.0, 0.0, prec);  // lambda^(m-1)
            for (int k = 1; k < m; ++k) lpow1 = lpow1 * lam;
            ApComplex lpow = lpow1 * lam;
            ApComplex c = eval_complex(t.c, z);
            v.p += c * lpow;
            v.dp += (eval_complex(t.dc, z) * lam + mfac * c * eval_complex(t.dlam, z)) * lpow1;
            v.scale += abs(c) * abs(lpow);
        }
        return v;
    }
};

}  // namespace

ZeroSet find_zeros(const Catalog& cat, int m, long precision, int max_iters) {
    if (precision < 128) throw std::invalid_argument("find_zeros: precision must be >= 128 bits");
    ChromaticResult cres = assemble(cat, m);
    const int b = cat.family.b;

    ZeroSet zs;
    zs.family = cat.family;
    zs.m = m;
    zs.precision = precision;
    zs.degree = cres.poly.degree();

    // peel off the integer roots 0..b-1 (each at least simple), tracking
    // multiplicities by repeated exact division
    RationalPoly p = cres.poly;
    std::vector<std::pair<long, int>> integer_roots;
    for (long r = 0; r < b; ++r) {
        int mult = 0;
        while (p.degree() > 0 && p.eval(Rational(r)) == 0) {
            p = p.deflate(Rational(r));
            ++mult;
        }
        if (mult > 0) integer_roots.emplace_back(r, mult);
    }

    const int n = p.degree();
    std::vector<ApComplex> coeffs;
    std::vector<ApFloat> abs_coeffs;
    coeffs.reserve(n + 1);
    for (int k = 0; k <= n; ++k) {
        coeffs.push_back(ApComplex::from(p.coeff(k), precision));
        abs_coeffs.push_back(ApFloat::from(abs(p.coeff(k)), precision));
    }

    // initial guesses on a perturbed circle; fixed LCG keeps runs identical
    std::vector<ApComplex> z;
    if (n > 0) {
        const double R = root_radius(p);
        unsigned long lcg = 0x2545F4914F6CDD1DUL;
        for (int k = 0; k < n; ++k) {
            lcg = lcg * 6364136223846793005UL + 1442695040888963407UL;
            double jitter = double(lcg >> 40) / double(1UL << 24) * 0.02 - 0.01;
            double theta = 2 * M_PI * k / n + 0.37 + jitter;
            double radius = R * (0.55 + 0.4 * (k + 0.5) / n);
            z.push_back(ApComplex::from(radius * std::cos(theta), radius * std::sin(theta),
                                        precision));
        }
    }

    // A root counts as converged once the correction is negligible or the
    // residual falls below what the working precision can resolve at that
    // point (sum |a_k||z|^k * 2^(16 - prec)); converged roots are frozen but
    // keep repelling the others.
    std::vector<bool> converged(size_t(n), false);
    const ApFloat eps_step = ldexp2(ApFloat::from(1L, precision), -long(precision) + 16);
    const ApFloat eps_eval = ldexp2(ApFloat::from(1L, precision), -long(precision) + 16);
    const ApComplex one = ApComplex::from(1.0, 0.0, precision);
    for (int iter = 0; iter < max_iters && n > 0; ++iter) {
        bool all_done = true;
        for (int k = 0; k < n; ++k) {
            if (converged[size_t(k)]) continue;
            auto [pv, dv] = eval_with_derivative(coeffs, z[k]);
            ApFloat noise_floor = eval_scale(abs_coeffs, abs(z[k])) * eps_eval;
            if (pv.is_zero() || abs(pv) <= noise_floor) {
                converged[size_t(k)] = true;
                continue;
            }
            if (dv.is_zero()) {  // critical point; nudge off it
                z[k] = z[k] + ApComplex::from(1e-6, 1e-6, precision);
                all_done = false;
                continue;
            }
            ApComplex newton = pv / dv;
            ApComplex sum(precision);
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                ApComplex diff = z[k] - z[j];
                if (diff.is_zero()) continue;
                sum += one / diff;
            }
            ApComplex corr = newton / (one - newton * sum);
            z[k] = z[k] - corr;
            if (abs(corr) < eps_step * (ApFloat::from(1L, precision) + abs(z[k])))
                converged[size_t(k)] = true;
            else
                all_done = false;
        }
        if (all_done) break;
    }

    // polish every iterated root by Newton steps on the product form, then
    // take residuals from it
    const ProductForm pf(cat, m, precision);
    const ApFloat eps_pf = ldexp2(ApFloat::from(1L, precision), -long(precision) + 24);

    // assemble records: exact integer roots first, then the iterated ones
    for (auto [r, mult] : integer_roots) {
        RootRecord rec;
        rec.z = ApComplex::from(double(r), 0.0, precision);
        rec.residual = ApFloat(precision);
        rec.residual_newton = ApFloat(precision);
        rec.multiplicity = mult;
        rec.exact_integer = true;
        zs.roots.push_back(std::move(rec));
    }
    for (int k = 0; k < n; ++k) {
        RootRecord rec;
        rec.z = z[k];
        ProductForm::Value v = pf.eval(rec.z);
        for (int step = 0; step < 8; ++step) {
            if (abs(v.p) <= v.scale * eps_pf) break;
            if (abs(v.dp).is_zero()) break;
            rec.z = rec.z - v.p / v.dp;
            v = pf.eval(rec.z);
        }
        rec.residual = abs(v.p);
        ApFloat da = abs(v.dp);
        rec.residual_newton = da.is_zero() ? rec.residual : rec.residual / da;
        rec.converged = converged[size_t(k)] && abs(v.p) <= v.scale * eps_pf;
        zs.roots.push_back(std::move(rec));
    }

    std::sort(zs.roots.begin(), zs.roots.end(), [](const RootRecord& a, const RootRecord& b_) {
        double ar = a.z.re.to_double(), br = b_.z.re.to_double();
        if (ar != br) return ar < br;
        return a.z.im.to_double() < b_.z.im.to_double();
    });

    // cluster near-coincident roots into multiplicity counts
    std::vector<RootRecord> merged;
    for (auto& r : zs.roots) {
        if (!merged.empty() && !r.exact_integer && !merged.back().exact_integer) {
            auto& last = merged.back();
            double dx = r.z.re.to_double() - last.z.re.to_double();
            double dy = r.z.im.to_double() - last.z.im.to_double();
            if (std::sqrt(dx * dx + dy * dy) < 1e-10) {
                last.multiplicity += r.multiplicity;
                continue;
            }
        }
        merged.push_back(std::move(r));
    }
    zs.roots = std::move(merged);
    return zs;
}

ZeroSet find_zeros(int b, Boundary boundary, int m, long precision, int max_iters) {
    return find_zeros(catalog(b, boundary), m, precision, max_iters);
}

SupportCheck zero_support_check(const ZeroSet& zs, double epsilon) {
    SupportCheck out;
    out.min_re = zs.roots.empty() ? 0 : zs.roots.front().z.re.to_double();
    for (size_t i = 0; i < zs.roots.size(); ++i) {
        double re = zs.roots[i].z.re.to_double();
        out.min_re = std::min(out.min_re, re);
        if (re < -epsilon) {
            out.ok = false;
            out.offending.push_back(i);
        }
    }
    return out;
}

double one_sided_distance(const ZeroSet& zs,
                          const std::vector<std::pair<double, double>>& cloud) {
    if (cloud.empty()) throw std::invalid_argument("one_sided_distance: empty reference cloud");
    double worst = 0;
    for (const auto& r : zs.roots) {
        double im = r.z.im.to_double();
        if (std::abs(im) < 1e-9) continue;  // non-real roots only
        double re = r.z.re.to_double();
        double best = std::numeric_limits<double>::infinity();
        for (const auto& [cx, cy] : cloud)
            best = std::min(best, std::hypot(re - cx, im - cy));
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace kbchroma
