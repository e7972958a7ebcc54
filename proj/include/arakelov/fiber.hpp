#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arakelov/linalg.hpp"
#include "arakelov/rational.hpp"

namespace arakelov {

// One irreducible component of a special fiber. local_degree is
// deg(L|_C) for L the pulled-back bundle of the covering; absent when no
// covering is attached.
struct ComponentRecord {
    std::string name;
    long long multiplicity = 1;
    long long genus = 0;
    std::optional<Rational> local_degree;
};

// A horizontal section crossing the fiber: hits[i] = S.C_i. The section
// meets the fiber with total multiplicity one: sum_i m_i * hits[i] = 1.
struct SectionHit {
    std::string name;
    long long width = 1;  // ramification index b_j of the cusp
    std::map<std::size_t, long long> hits;

    long long hits_component(std::size_t i) const {
        auto it = hits.find(i);
        return it == hits.end() ? 0 : it->second;
    }
};

// Dual-graph statistics (r, u, l, c): component count, max and min nonzero
// crossing number, and the dual-graph diameter in edge count.
struct DualStats {
    long long r = 0;
    long long u = 0;
    long long l = 0;
    long long c = 0;

    friend bool operator==(const DualStats&, const DualStats&) = default;
};

// Combinatorial model of one reduction fiber as a weighted crossing graph.
// Crossing keys are unordered pairs stored as (min, max); diagonal
// self-intersections are always derived from M.m = 0, never stored.
class SpecialFiber {
  public:
    SpecialFiber(long long prime_norm, long long residue_char,
                 std::vector<ComponentRecord> components);

    void set_crossing(std::size_t i, std::size_t j, long long count);
    void add_section(SectionHit s);

    long long prime_norm() const { return prime_norm_; }
    long long residue_char() const { return residue_char_; }
    const std::vector<ComponentRecord>& components() const {
        return components_;
    }
    std::size_t size() const { return components_.size(); }
    long long crossing(std::size_t i, std::size_t j) const;
    const std::map<std::pair<std::size_t, std::size_t>, long long>&
    crossings() const {
        return crossings_;
    }
    const std::vector<SectionHit>& sections() const { return sections_; }

    std::size_t component_index(const std::string& name) const;
    RatVec multiplicity_vector() const;

  private:
    long long prime_norm_;
    long long residue_char_;
    std::vector<ComponentRecord> components_;
    std::map<std::pair<std::size_t, std::size_t>, long long> crossings_;
    std::vector<SectionHit> sections_;
};

struct Violation {
    enum class Code {
        Disconnected,
        NonPositiveMultiplicity,
        NegativeCrossing,
        BadPrimeNorm,
        DegreeMismatch,
        BadSection,
    };
    Code code;
    std::string message;
};

// Structural validation; returns an empty list for a valid fiber. When
// covering_degree is supplied and local degrees are present, also checks
// sum_i m_i * deg_i = d.
std::vector<Violation> validate_fiber(
    const SpecialFiber& f,
    const std::optional<Rational>& covering_degree = std::nullopt);

void require_valid(const SpecialFiber& f);

// C_i^2 = -(1/m_i) sum_{j != i} m_j (C_i.C_j); forced by triviality of the
// full fiber.
RatVec self_intersections(const SpecialFiber& f);

// Full intersection matrix with derived diagonal. Satisfies M.m = 0 and is
// negative semidefinite with kernel spanned by m for connected fibers.
RatMatrix intersection_matrix(const SpecialFiber& f);

// (r, u, l, c); u and l range over off-diagonal crossings only, c is the
// dual-graph diameter by BFS. Throws SingleComponent when r = 1.
DualStats dual_graph_stats(const SpecialFiber& f);

// omega . C_i = 2 p_a(C_i) - 2 - C_i^2, checked against
// sum_i m_i (omega . C_i) = 2g - 2; throws AdjunctionMismatch otherwise.
RatVec omega_restrictions(const SpecialFiber& f, long long genus);

}  // namespace arakelov
