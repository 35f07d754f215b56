#pragma once
// Annular (m,n)-diagrams. Points 1..m sit on the left boundary and 1..n on the right,
// numbered from the top. Each strand stores the net number of times it crosses the
// top/bottom cut, counted positively when it runs downward through the bottom.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace atl {

struct SizeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidDiagram : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using Arc = std::pair<int, int>;

class Diagram {
public:
    Diagram() = default;
    // arcs (i, j) with i < j <= size + i - 1; j > size wraps through the bottom
    Diagram(int m, int n, const std::vector<Arc>& left_arcs, const std::vector<Arc>& right_arcs, int through_shift,
            int loops = 0);

    static Diagram identity(int N);
    static Diagram omega(int N, int power = 1);  // Omega^power
    static Diagram e(int i, int N);               // 1 <= i <= N (e_N closes across the cut)

    int m() const { return m_; }
    int n() const { return n_; }
    int loops() const { return loops_; }
    int through() const;
    int rank() const;
    bool monic() const { return through() == n_; }

    std::vector<Arc> left_arcs() const { return arcs_on(0); }
    std::vector<Arc> right_arcs() const { return arcs_on(1); }
    std::vector<int> left_through() const;  // left through positions, increasing
    int through_shift() const;

    Diagram dagger() const;
    Diagram vflip() const;

    // point k: left p -> p-1, right p -> m+p-1
    int partner(int k) const { return partner_[k]; }
    int wind(int k) const { return wind_[k]; }

    friend bool operator==(const Diagram& a, const Diagram& b) {
        return a.m_ == b.m_ && a.n_ == b.n_ && a.loops_ == b.loops_ && a.partner_ == b.partner_ && a.wind_ == b.wind_;
    }
    friend bool operator!=(const Diagram& a, const Diagram& b) { return !(a == b); }
    friend bool operator<(const Diagram& a, const Diagram& b);

    nlohmann::json to_json() const;
    static Diagram from_json(const nlohmann::json& j);
    std::string str() const;

    // raw constructor used by composition
    static Diagram from_strands(int m, int n, std::vector<int> partner, std::vector<int> wind, int loops);

private:
    int m_ = 0, n_ = 0, loops_ = 0;
    std::vector<int> partner_, wind_;
    std::vector<Arc> arcs_on(int side) const;
    void validate() const;
};

struct WeightedDiagram {
    Diagram diagram;
    int beta_power = 0;
    friend bool operator==(const WeightedDiagram& a, const WeightedDiagram& b) {
        return a.diagram == b.diagram && a.beta_power == b.beta_power;
    }
};

// glue the right side of a to the left side of b
WeightedDiagram compose(const Diagram& a, const Diagram& b);
WeightedDiagram compose(const WeightedDiagram& a, const WeightedDiagram& b);
WeightedDiagram compose_word(const std::vector<Diagram>& word);

// realisation of the algebra by weighted diagrams, for relation checks
struct DiagramAlgebra {
    using Elem = WeightedDiagram;
    int N;
    Elem e(int i) const { return {Diagram::e(i, N), 0}; }
    Elem omega(int power) const { return {Diagram::omega(N, power), 0}; }
    Elem id() const { return {Diagram::identity(N), 0}; }
    Elem mul(const Elem& a, const Elem& b) const { return compose(a, b); }
    Elem times_beta(const Elem& a) const { return {a.diagram, a.beta_power + 1}; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
};

}  // namespace atl
