#include "arakelov/fiber.hpp"

#include <algorithm>
#include <queue>

#include "arakelov/errors.hpp"

namespace arakelov {

SpecialFiber::SpecialFiber(long long prime_norm, long long residue_char,
                           std::vector<ComponentRecord> components)
    : prime_norm_(prime_norm),
      residue_char_(residue_char),
      components_(std::move(components)) {
    if (components_.empty())
        throw InvalidFiber("fiber needs at least one component");
}

void SpecialFiber::set_crossing(std::size_t i, std::size_t j,
                                long long count) {
    if (i == j) throw InvalidFiber("diagonal crossings are derived, not set");
    if (i >= size() || j >= size())
        throw InvalidFiber("crossing index out of range");
    const auto key = std::minmax(i, j);
    if (count == 0)
        crossings_.erase(key);
    else
        crossings_[key] = count;
}

void SpecialFiber::add_section(SectionHit s) {
    for (const auto& [idx, n] : s.hits)
        if (idx >= size())
            throw InvalidFiber("section hit index out of range");
    sections_.push_back(std::move(s));
}

long long SpecialFiber::crossing(std::size_t i, std::size_t j) const {
    if (i == j) return 0;
    auto it = crossings_.find(std::minmax(i, j));
    return it == crossings_.end() ? 0 : it->second;
}

std::size_t SpecialFiber::component_index(const std::string& name) const {
    for (std::size_t i = 0; i < components_.size(); ++i)
        if (components_[i].name == name) return i;
    throw InvalidFiber("unknown component name: " + name);
}

RatVec SpecialFiber::multiplicity_vector() const {
    RatVec m;
    m.reserve(size());
    for (const auto& c : components_) m.emplace_back(c.multiplicity);
    return m;
}

namespace {

bool is_connected(const SpecialFiber& f) {
    const std::size_t n = f.size();
    std::vector<bool> seen(n, false);
    std::queue<std::size_t> q;
    q.push(0);
    seen[0] = true;
    std::size_t count = 1;
    while (!q.empty()) {
        const std::size_t v = q.front();
        q.pop();
        for (std::size_t w = 0; w < n; ++w) {
            if (!seen[w] && f.crossing(v, w) > 0) {
                seen[w] = true;
                ++count;
                q.push(w);
            }
        }
    }
    return count == n;
}

}  // namespace

std::vector<Violation> validate_fiber(
    const SpecialFiber& f, const std::optional<Rational>& covering_degree) {
    std::vector<Violation> out;
    if (f.prime_norm() <= 1)
        out.push_back({Violation::Code::BadPrimeNorm,
                       "prime norm must exceed 1"});
    for (const auto& c : f.components())
        if (c.multiplicity < 1)
            out.push_back({Violation::Code::NonPositiveMultiplicity,
                           "component " + c.name +
                               " has non-positive multiplicity"});
    for (const auto& [key, count] : f.crossings())
        if (count < 0)
            out.push_back({Violation::Code::NegativeCrossing,
                           "negative crossing count"});
    if (f.size() > 1 && !is_connected(f))
        out.push_back(
            {Violation::Code::Disconnected, "fiber graph not connected"});

    bool degrees_present = true;
    for (const auto& c : f.components())
        if (!c.local_degree.has_value()) degrees_present = false;
    if (covering_degree.has_value() && degrees_present) {
        Rational total;
        for (const auto& c : f.components())
            total += Rational(c.multiplicity) * (*c.local_degree);
        if (total != *covering_degree)
            out.push_back({Violation::Code::DegreeMismatch,
                           "sum m_i * local_degree_i = " + total.str() +
                               " differs from covering degree " +
                               covering_degree->str()});
    }

    for (const auto& s : f.sections()) {
        Rational total;
        for (const auto& [idx, n] : s.hits) {
            if (n < 0) {
                out.push_back({Violation::Code::BadSection,
                               "section " + s.name + " has a negative hit"});
            }
            total += Rational(f.components()[idx].multiplicity) * Rational(n);
        }
        if (total != Rational(1))
            out.push_back({Violation::Code::BadSection,
                           "section " + s.name +
                               " meets the fiber with total multiplicity " +
                               total.str() + ", expected 1"});
        if (s.width < 1)
            out.push_back({Violation::Code::BadSection,
                           "section " + s.name + " has non-positive width"});
    }
    return out;
}

void require_valid(const SpecialFiber& f) {
    const auto violations = validate_fiber(f);
    if (!violations.empty())
        throw InvalidFiber("invalid fiber: " + violations.front().message);
}

RatVec self_intersections(const SpecialFiber& f) {
    require_valid(f);
    const std::size_t n = f.size();
    RatVec diag(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational acc;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i)
                acc += Rational(f.components()[j].multiplicity) *
                       Rational(f.crossing(i, j));
        diag[i] = -acc / Rational(f.components()[i].multiplicity);
    }
    return diag;
}

RatMatrix intersection_matrix(const SpecialFiber& f) {
    const RatVec diag = self_intersections(f);
    const std::size_t n = f.size();
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = diag[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = Rational(f.crossing(i, j));
            m(j, i) = m(i, j);
        }
    }
    return m;
}

DualStats dual_graph_stats(const SpecialFiber& f) {
    require_valid(f);
    const std::size_t n = f.size();
    if (n < 2) throw SingleComponent(static_cast<long long>(n));

    DualStats st;
    st.r = static_cast<long long>(n);
    st.u = 0;
    st.l = 0;
    for (const auto& [key, count] : f.crossings()) {
        st.u = std::max(st.u, count);
        if (count > 0 && (st.l == 0 || count < st.l)) st.l = count;
    }

    // Diameter by BFS from every vertex.
    long long diameter = 0;
    for (std::size_t src = 0; src < n; ++src) {
        std::vector<long long> dist(n, -1);
        std::queue<std::size_t> q;
        dist[src] = 0;
        q.push(src);
        while (!q.empty()) {
            const std::size_t v = q.front();
            q.pop();
            for (std::size_t w = 0; w < n; ++w) {
                if (dist[w] < 0 && f.crossing(v, w) > 0) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
            }
        }
        for (std::size_t w = 0; w < n; ++w)
            diameter = std::max(diameter, dist[w]);
    }
    st.c = diameter;
    return st;
}

RatVec omega_restrictions(const SpecialFiber& f, long long genus) {
    const RatVec diag = self_intersections(f);
    const std::size_t n = f.size();
    RatVec omega(n);
    Rational total;
    for (std::size_t i = 0; i < n; ++i) {
        omega[i] = Rational(2 * f.components()[i].genus - 2) - diag[i];
        total += Rational(f.components()[i].multiplicity) * omega[i];
    }
    if (total != Rational(2 * genus - 2))
        throw AdjunctionMismatch(
            "sum m_i (omega . C_i) = " + total.str() + " but 2g-2 = " +
            Rational(2 * genus - 2).str() + "; genus data is inconsistent");
    return omega;
}

}  // namespace arakelov
