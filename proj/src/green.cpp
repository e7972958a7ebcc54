#include "arakelov/green.hpp"

#include <cmath>
#include <random>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "arakelov/errors.hpp"

namespace arakelov {

namespace {

// Q is positive semidefinite with kernel exactly span(1) iff the leading
// (n-1) x (n-1) block is positive definite, given symmetry and Q 1 = 0.
bool reduced_block_positive_definite(const RatMatrix& q) {
    const std::size_t n = q.rows() - 1;
    RatMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = q(i, j);
    for (std::size_t k = 0; k < n; ++k) {
        if (a(k, k) <= Rational(0)) return false;
        for (std::size_t i = k + 1; i < n; ++i) {
            const Rational f = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return true;
}

}  // namespace

void validate_surface(const DiscreteSurface& s) {
    const std::size_t n = s.size();
    if (n < 2) throw InvalidSurface("surface needs at least two points");
    if (s.dirichlet_form.rows() != n || s.dirichlet_form.cols() != n)
        throw InvalidSurface("Dirichlet form has wrong dimensions");
    if (!s.dirichlet_form.is_symmetric())
        throw InvalidSurface("Dirichlet form not symmetric");
    const RatVec ones(n, Rational(1));
    for (const Rational& r : s.dirichlet_form.multiply(ones))
        if (!r.is_zero())
            throw InvalidSurface("Dirichlet form does not kill constants");
    if (!reduced_block_positive_definite(s.dirichlet_form))
        throw InvalidSurface(
            "Dirichlet form is not positive semidefinite with "
            "one-dimensional kernel (disconnected?)");
    validate_measure(s.base_measure, n);
}

void validate_measure(const RatVec& nu, std::size_t n) {
    if (nu.size() != n) throw InvalidMeasure("measure has wrong length");
    Rational total;
    for (const Rational& x : nu) {
        if (x <= Rational(0))
            throw InvalidMeasure("measure must be strictly positive");
        total += x;
    }
    if (total != Rational(1))
        throw InvalidMeasure("measure must sum to 1, got " + total.str());
}

GreenKernel green_matrix(const DiscreteSurface& s, const RatVec& nu) {
    validate_surface(s);
    const std::size_t n = s.size();
    validate_measure(nu, n);

    RatMatrix g(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        RatVec rhs(n);
        for (std::size_t i = 0; i < n; ++i)
            rhs[i] = Rational(i == col ? 1 : 0) - nu[i];
        RatVec x = solve_singular_symmetric(s.dirichlet_form, rhs, 0);
        Rational shift;
        for (std::size_t i = 0; i < n; ++i) shift += nu[i] * x[i];
        for (std::size_t i = 0; i < n; ++i) g(i, col) = x[i] - shift;
    }

    GreenKernel kernel{std::move(g), nu};
    if (auto bad = first_kernel_violation(s, kernel))
        throw InternalCheckError("constructed Green kernel violates " + *bad);
    return kernel;
}

std::optional<std::string> first_kernel_violation(const DiscreteSurface& s,
                                                  const GreenKernel& k) {
    const std::size_t n = s.size();
    const RatMatrix& g = k.matrix;
    if (g.rows() != n || g.cols() != n) return "dimension";
    if (!g.is_symmetric()) return "symmetry";
    for (std::size_t col = 0; col < n; ++col) {
        Rational acc;
        for (std::size_t i = 0; i < n; ++i) acc += k.measure[i] * g(i, col);
        if (!acc.is_zero()) return "normalization nu^T G = 0";
    }
    for (std::size_t col = 0; col < n; ++col) {
        for (std::size_t i = 0; i < n; ++i) {
            Rational acc;
            for (std::size_t j = 0; j < n; ++j)
                acc += s.dirichlet_form(i, j) * g(j, col);
            const Rational expect =
                Rational(i == col ? 1 : 0) - k.measure[i];
            if (acc != expect) return "Green equation Q G = I - nu 1^T";
        }
    }
    return std::nullopt;
}

ChangeOfMeasure change_of_measure(const DiscreteSurface& s, const RatVec& mu,
                                  const RatVec& nu) {
    const GreenKernel gm = green_matrix(s, mu);
    const std::size_t n = s.size();
    validate_measure(nu, n);
    ChangeOfMeasure out;
    out.a.assign(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        Rational acc;
        for (std::size_t j = 0; j < n; ++j) acc += gm.matrix(i, j) * nu[j];
        out.a[i] = -acc;
    }
    for (std::size_t i = 0; i < n; ++i) out.c += -out.a[i] * nu[i];
    return out;
}

GreenIdentityReport verify_green_identities(const DiscreteSurface& s,
                                            const RatVec& mu,
                                            const RatVec& nu) {
    GreenIdentityReport rep;
    const std::size_t n = s.size();
    const GreenKernel gm = green_matrix(s, mu);
    const GreenKernel gn = green_matrix(s, nu);
    rep.items.push_back(
        {"defining equations (mu kernel)",
         !first_kernel_violation(s, gm).has_value()});
    rep.items.push_back(
        {"defining equations (nu kernel)",
         !first_kernel_violation(s, gn).has_value()});

    const ChangeOfMeasure cm = change_of_measure(s, mu, nu);

    bool gaac = true;
    for (std::size_t i = 0; i < n && gaac; ++i)
        for (std::size_t j = 0; j < n && gaac; ++j)
            if (gn.matrix(i, j) !=
                gm.matrix(i, j) + cm.a[i] + cm.a[j] + cm.c)
                gaac = false;
    rep.items.push_back({"change-of-measure identity", gaac});

    bool second = true;
    for (std::size_t p = 0; p < n && second; ++p) {
        Rational acc;
        for (std::size_t z = 0; z < n; ++z)
            acc += (gn.matrix(z, p) - gm.matrix(z, p)) * (mu[z] + nu[z]);
        if (acc != Rational(2) * cm.a[p] + cm.c) second = false;
    }
    rep.items.push_back({"two-measure integral identity", second});

    rep.items.push_back({"c nonnegative", cm.c >= Rational(0)});
    rep.items.push_back(
        {"c vanishes exactly for equal measures", (cm.c == Rational(0)) == (mu == nu)});

    // Resolvent equation Delta_nu (G_nu D_nu f) = f on the mean-zero family
    // f^(i) = delta_i / nu_i - 1.
    bool resolvent = true;
    for (std::size_t i = 0; i < n && resolvent; ++i) {
        RatVec f(n, Rational(-1));
        f[i] += Rational(1) / nu[i];
        RatVec dnf(n);
        for (std::size_t z = 0; z < n; ++z) dnf[z] = nu[z] * f[z];
        RatVec gdnf(n);
        for (std::size_t z = 0; z < n; ++z) {
            Rational acc;
            for (std::size_t w = 0; w < n; ++w)
                acc += gn.matrix(z, w) * dnf[w];
            gdnf[z] = acc;
        }
        const RatVec lhs = s.dirichlet_form.multiply(gdnf);
        for (std::size_t z = 0; z < n; ++z)
            if (lhs[z] != dnf[z]) resolvent = false;
    }
    rep.items.push_back({"resolvent equation", resolvent});
    return rep;
}

SpectralCheck spectral_bound_check(const DiscreteSurface& s, const RatVec& mu,
                                   const RatVec& nu) {
    validate_surface(s);
    const std::size_t n = s.size();
    validate_measure(mu, n);
    validate_measure(nu, n);

    SpectralCheck out;
    out.c_exact = change_of_measure(s, mu, nu).c;

    Rational fnorm;
    for (std::size_t i = 0; i < n; ++i) {
        const Rational f = nu[i] / mu[i] - Rational(1);
        fnorm += f * f * mu[i];
    }
    out.f_norm_sq = fnorm.to_double();

    Eigen::MatrixXd sym(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const double di = 1.0 / std::sqrt(mu[i].to_double());
        for (std::size_t j = 0; j < n; ++j)
            sym(i, j) = di * s.dirichlet_form(i, j).to_double() /
                        std::sqrt(mu[j].to_double());
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
    if (solver.info() != Eigen::Success)
        throw EigenFailure("eigenvalue solve failed");
    const auto& ev = solver.eigenvalues();
    const double scale = std::abs(ev[n - 1]);
    if (std::abs(ev[0]) > 1e-9 * scale)
        throw EigenFailure("smallest eigenvalue is not numerically zero");
    out.lambda1 = ev[1];
    if (!(out.lambda1 > 0.0))
        throw EigenFailure("spectral gap is not positive");

    out.bound_resolvent = out.f_norm_sq / out.lambda1;
    out.bound_doubled = 2.0 * out.bound_resolvent;
    const double c = out.c_exact.to_double();
    out.sandwich_ok = out.c_exact >= Rational(0) &&
                      c <= out.bound_resolvent * (1.0 + 1e-9) + 1e-30 &&
                      out.bound_resolvent <= out.bound_doubled;
    return out;
}

namespace {

class TrialRng {
  public:
    explicit TrialRng(std::uint64_t seed) : eng_(seed) {}
    // Uniform in [0, bound).
    std::uint64_t next(std::uint64_t bound) { return eng_() % bound; }

  private:
    std::mt19937_64 eng_;
};

DiscreteSurface random_surface(TrialRng& rng, std::size_t max_size) {
    const std::size_t n = 2 + rng.next(max_size - 1);
    RatMatrix q(n, n);
    auto add_edge = [&](std::size_t i, std::size_t j, const Rational& w) {
        q(i, i) += w;
        q(j, j) += w;
        q(i, j) -= w;
        q(j, i) -= w;
    };
    for (std::size_t i = 1; i < n; ++i) {
        const std::size_t j = rng.next(i);
        add_edge(i, j, Rational(1 + rng.next(5), 1 + rng.next(5)));
    }
    const std::size_t extra = rng.next(n);
    for (std::size_t e = 0; e < extra; ++e) {
        const std::size_t i = rng.next(n);
        const std::size_t j = rng.next(n);
        if (i == j) continue;
        add_edge(i, j, Rational(1 + rng.next(5), 1 + rng.next(5)));
    }
    DiscreteSurface s;
    s.dirichlet_form = std::move(q);
    RatVec weights(n);
    Rational total;
    for (std::size_t i = 0; i < n; ++i) {
        weights[i] = Rational(1 + rng.next(9));
        total += weights[i];
    }
    for (auto& w : weights) w /= total;
    s.base_measure = std::move(weights);
    return s;
}

RatVec random_measure(TrialRng& rng, std::size_t n) {
    RatVec weights(n);
    Rational total;
    for (std::size_t i = 0; i < n; ++i) {
        weights[i] = Rational(1 + rng.next(9), 1 + rng.next(4));
        total += weights[i];
    }
    for (auto& w : weights) w /= total;
    return weights;
}

}  // namespace

GreenSelftest run_green_selftest(std::size_t max_size, std::uint64_t seed,
                                 std::size_t trials) {
    if (max_size < 2)
        throw InputError("surface size must be at least 2");
    if (trials < 1) throw InputError("need at least one trial");

    GreenSelftest out;
    TrialRng rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        const DiscreteSurface s = random_surface(rng, max_size);
        const RatVec nu = random_measure(rng, s.size());

        GreenTrial trial;
        trial.size = s.size();
        const GreenIdentityReport rep =
            verify_green_identities(s, s.base_measure, nu);
        trial.identities_ok = rep.all_pass();
        if (!trial.identities_ok)
            for (const auto& item : rep.items)
                if (!item.pass) {
                    trial.first_failure = item.name;
                    break;
                }
        const SpectralCheck sc = spectral_bound_check(s, s.base_measure, nu);
        trial.sandwich_ok = sc.sandwich_ok;
        trial.lambda1 = sc.lambda1;
        trial.c_exact = sc.c_exact;
        if (!trial.sandwich_ok && trial.first_failure.empty())
            trial.first_failure = "spectral sandwich";
        if (!(trial.identities_ok && trial.sandwich_ok)) {
            out.all_pass = false;
            if (!out.first_failing_trial) out.first_failing_trial = t;
        }
        out.trials.push_back(std::move(trial));
    }
    return out;
}

}  // namespace arakelov
