#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arakelov/linalg.hpp"
#include "arakelov/rational.hpp"

namespace arakelov {

class EigenFailure : public InternalCheckError {
  public:
    using InternalCheckError::InternalCheckError;
};

// Measured finite space with a Dirichlet form: Q symmetric positive
// semidefinite with kernel exactly the constants, mu a positive probability
// vector. The discrete Laplacian is D_mu^{-1} Q.
struct DiscreteSurface {
    RatMatrix dirichlet_form;
    RatVec base_measure;

    std::size_t size() const { return base_measure.size(); }
};

void validate_surface(const DiscreteSurface& s);
void validate_measure(const RatVec& nu, std::size_t n);

// Normalized Green kernel for the measure nu:
//   Q G = I - nu 1^T,  nu^T G = 0,  G = G^T.
struct GreenKernel {
    RatMatrix matrix;
    RatVec measure;
};

GreenKernel green_matrix(const DiscreteSurface& s, const RatVec& nu);

// Defining-equation check for an explicit kernel; returns the name of the
// first violated identity, or nullopt. Used as a negative control.
std::optional<std::string> first_kernel_violation(const DiscreteSurface& s,
                                                  const GreenKernel& k);

// Change-of-measure data: a = -G_mu nu, c = nu^T G_mu nu, satisfying
//   g_nu(z,w) = g_mu(z,w) + a(z) + a(w) + c   entrywise.
struct ChangeOfMeasure {
    RatVec a;
    Rational c;
};

ChangeOfMeasure change_of_measure(const DiscreteSurface& s, const RatVec& mu,
                                  const RatVec& nu);

struct GreenIdentityReport {
    struct Item {
        std::string name;
        bool pass;
    };
    std::vector<Item> items;

    bool all_pass() const {
        for (const auto& i : items)
            if (!i.pass) return false;
        return true;
    }
};

// Exact pass/fail for every identity of the Green calculus on (mu, nu):
// defining equations of both kernels, the change-of-measure identity, the
// two-measure integral identity at every base point, positivity of c, and
// the resolvent equation on a spanning family of mean-zero functions.
GreenIdentityReport verify_green_identities(const DiscreteSurface& s,
                                            const RatVec& mu,
                                            const RatVec& nu);

// Spectral sandwich for c = c_{mu,nu} with nu = (f + 1) mu:
//   0 <= c <= (1/lambda1) ||f||^2 <= (2/lambda1) ||f||^2.
// c and ||f||^2 are exact; lambda1 is the smallest nonzero eigenvalue of
// D_mu^{-1} Q, computed on the symmetrized form D_mu^{-1/2} Q D_mu^{-1/2}.
struct SpectralCheck {
    Rational c_exact;
    double lambda1 = 0.0;
    double f_norm_sq = 0.0;
    double bound_resolvent = 0.0;
    double bound_doubled = 0.0;
    bool sandwich_ok = false;
};

SpectralCheck spectral_bound_check(const DiscreteSurface& s, const RatVec& mu,
                                   const RatVec& nu);

// Deterministic random instances for the self-test surface.
struct GreenTrial {
    std::size_t size = 0;
    bool identities_ok = false;
    bool sandwich_ok = false;
    double lambda1 = 0.0;
    Rational c_exact;
    std::string first_failure;
};

struct GreenSelftest {
    std::vector<GreenTrial> trials;
    bool all_pass = true;
    std::optional<std::size_t> first_failing_trial;
};

GreenSelftest run_green_selftest(std::size_t max_size, std::uint64_t seed,
                                 std::size_t trials);

}  // namespace arakelov
