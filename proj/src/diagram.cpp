#include "diagram.hpp"

#include <algorithm>
#include <sstream>

namespace atl {

namespace {

int floordiv(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

int mod(int a, int b) { return ((a % b) + b) % b; }

}  // namespace

Diagram::Diagram(int m, int n, const std::vector<Arc>& left_arcs, const std::vector<Arc>& right_arcs,
                 int through_shift, int loops)
    : m_(m), n_(n), loops_(loops), partner_(m + n, -1), wind_(m + n, 0) {
    if (m < 0 || n < 0 || loops < 0) throw InvalidDiagram("negative size");
    auto place = [&](const std::vector<Arc>& arcs, int size, int offset) {
        for (auto [i, j] : arcs) {
            if (i < 1 || i > size || j <= i || j > size + i - 1)
                throw InvalidDiagram("arc (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
            int p = offset + i - 1, q = offset + (j - 1) % size;
            if (partner_[p] != -1 || partner_[q] != -1) throw InvalidDiagram("point used twice");
            partner_[p] = q;
            partner_[q] = p;
            wind_[p] = j > size ? 1 : 0;
            wind_[q] = -wind_[p];
        }
    };
    place(left_arcs, m, 0);
    place(right_arcs, n, m);
    std::vector<int> a, b;
    for (int p = 0; p < m; ++p)
        if (partner_[p] == -1) a.push_back(p);
    for (int p = 0; p < n; ++p)
        if (partner_[m + p] == -1) b.push_back(m + p);
    if (a.size() != b.size()) throw InvalidDiagram("through-line counts differ on the two sides");
    int k = static_cast<int>(a.size());
    if (k == 0 && through_shift != 0) throw InvalidDiagram("shift without through lines");
    if (k > 0 && loops > 0) throw InvalidDiagram("non-contractible loops cannot coexist with through lines");
    for (int i = 1; i <= k; ++i) {
        int e = through_shift + i;
        int p = mod(e - 1, k), K = floordiv(e - 1, k);
        int l = a[i - 1], r = b[p];
        partner_[l] = r;
        partner_[r] = l;
        wind_[l] = K;
        wind_[r] = -K;
    }
    validate();
}

Diagram Diagram::from_strands(int m, int n, std::vector<int> partner, std::vector<int> wind, int loops) {
    Diagram d;
    d.m_ = m;
    d.n_ = n;
    d.loops_ = loops;
    d.partner_ = std::move(partner);
    d.wind_ = std::move(wind);
    return d;
}

void Diagram::validate() const {
    // arcs on one side enclose closed cyclic intervals that must form a laminar family
    for (int side = 0; side < 2; ++side) {
        int size = side ? n_ : m_;
        int off = side ? m_ : 0;
        std::vector<std::vector<bool>> sets;
        for (auto [i, j] : arcs_on(side)) {
            std::vector<bool> s(size, false);
            for (int t = i; t <= j; ++t) s[(t - 1) % size] = true;
            sets.push_back(s);
        }
        for (int p = 0; p < size; ++p) {
            int k = off + p;
            bool through = (partner_[k] >= m_) != (k >= m_);
            if (!through) continue;
            for (auto& s : sets)
                if (s[p]) throw InvalidDiagram("an arc encloses a through point");
        }
        for (size_t x = 0; x < sets.size(); ++x)
            for (size_t y = x + 1; y < sets.size(); ++y) {
                bool inter = false, xy = true, yx = true;
                for (int p = 0; p < size; ++p) {
                    if (sets[x][p] && sets[y][p]) inter = true;
                    if (sets[x][p] && !sets[y][p]) xy = false;
                    if (sets[y][p] && !sets[x][p]) yx = false;
                }
                if (inter && !xy && !yx) throw InvalidDiagram("crossing arcs");
            }
    }
}

std::vector<Arc> Diagram::arcs_on(int side) const {
    std::vector<Arc> out;
    int size = side ? n_ : m_;
    int off = side ? m_ : 0;
    for (int p = 0; p < size; ++p) {
        int k = off + p, q = partner_[k];
        if (q < off || q >= off + size) continue;
        int pq = q - off;
        if (wind_[k] == 0 && p < pq) out.emplace_back(p + 1, pq + 1);
        else if (wind_[k] == 1) out.emplace_back(p + 1, pq + 1 + size);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Diagram Diagram::identity(int N) { return Diagram(N, N, {}, {}, 0); }

Diagram Diagram::omega(int N, int power) { return Diagram(N, N, {}, {}, N == 0 ? 0 : power); }

Diagram Diagram::e(int i, int N) {
    if (N < 2 || i < 1 || i > N) throw InvalidDiagram("e_i needs 1 <= i <= N and N >= 2");
    Arc a{i, i + 1};
    return Diagram(N, N, {a}, {a}, 0);
}

int Diagram::through() const {
    int t = 0;
    for (int p = 0; p < m_; ++p)
        if (partner_[p] >= m_) ++t;
    return t;
}

std::vector<int> Diagram::left_through() const {
    std::vector<int> r;
    for (int p = 0; p < m_; ++p)
        if (partner_[p] >= m_) r.push_back(p + 1);
    return r;
}

int Diagram::through_shift() const {
    int k = through();
    if (k == 0) return 0;
    int a1 = -1;
    for (int p = 0; p < m_; ++p)
        if (partner_[p] >= m_) {
            a1 = p;
            break;
        }
    int b = partner_[a1], idx = 0;
    for (int p = m_; p < b; ++p)
        if (partner_[p] < m_) ++idx;
    return idx + 1 + wind_[a1] * k - 1;
}

int Diagram::rank() const {
    int r = loops_;
    for (size_t k = 0; k < partner_.size(); ++k)
        if (static_cast<int>(k) < partner_[k]) r += std::abs(wind_[k]);
    return r;
}

Diagram Diagram::dagger() const {
    int tot = m_ + n_;
    std::vector<int> p(tot), w(tot);
    auto img = [&](int k) { return k < m_ ? n_ + k : k - m_; };
    for (int k = 0; k < tot; ++k) {
        p[img(k)] = img(partner_[k]);
        w[img(k)] = wind_[k];
    }
    return from_strands(n_, m_, std::move(p), std::move(w), loops_);
}

Diagram Diagram::vflip() const {
    int tot = m_ + n_;
    std::vector<int> p(tot), w(tot);
    auto img = [&](int k) { return k < m_ ? m_ - 1 - k : m_ + (n_ - 1 - (k - m_)); };
    for (int k = 0; k < tot; ++k) {
        p[img(k)] = img(partner_[k]);
        w[img(k)] = -wind_[k];
    }
    return from_strands(m_, n_, std::move(p), std::move(w), loops_);
}

bool operator<(const Diagram& a, const Diagram& b) {
    return std::tie(a.m_, a.n_, a.loops_, a.partner_, a.wind_) < std::tie(b.m_, b.n_, b.loops_, b.partner_, b.wind_);
}

nlohmann::json Diagram::to_json() const {
    nlohmann::json j;
    j["m"] = m_;
    j["n"] = n_;
    auto arcs = [](const std::vector<Arc>& v) {
        nlohmann::json a = nlohmann::json::array();
        for (auto [x, y] : v) a.push_back({x, y});
        return a;
    };
    j["left_arcs"] = arcs(left_arcs());
    j["right_arcs"] = arcs(right_arcs());
    j["through_shift"] = through_shift();
    j["loops"] = loops_;
    return j;
}

Diagram Diagram::from_json(const nlohmann::json& j) {
    auto arcs = [](const nlohmann::json& a) {
        std::vector<Arc> v;
        for (auto& x : a) v.emplace_back(x.at(0).get<int>(), x.at(1).get<int>());
        return v;
    };
    return Diagram(j.at("m").get<int>(), j.at("n").get<int>(), arcs(j.at("left_arcs")), arcs(j.at("right_arcs")),
                   j.value("through_shift", 0), j.value("loops", 0));
}

std::string Diagram::str() const { return to_json().dump(); }

WeightedDiagram compose(const Diagram& a, const Diagram& b) {
    if (a.n() != b.m())
        throw SizeMismatch("cannot compose (" + std::to_string(a.m()) + "," + std::to_string(a.n()) + ") with (" +
                           std::to_string(b.m()) + "," + std::to_string(b.n()) + ")");
    int m = a.m(), k = a.n(), n = b.n();
    std::vector<int> partner(m + n, -1), wind(m + n, 0);
    std::vector<char> seen(k, 0);
    // follow a strand entering the middle at point j from the a side
    auto run = [&](int j, int& total) -> int {
        for (;;) {
            seen[j] = 1;
            int q = b.partner(j);
            total += b.wind(j);
            if (q >= b.m()) return m + (q - b.m());
            seen[q] = 1;
            int r = a.partner(a.m() + q);
            total += a.wind(a.m() + q);
            if (r < a.m()) return r;
            j = r - a.m();
        }
    };
    auto run_from_b = [&](int j, int& total) -> int {
        for (;;) {
            seen[j] = 1;
            int r = a.partner(a.m() + j);
            total += a.wind(a.m() + j);
            if (r < a.m()) return r;
            int q0 = r - a.m();
            seen[q0] = 1;
            int q = b.partner(q0);
            total += b.wind(q0);
            if (q >= b.m()) return m + (q - b.m());
            j = q;
        }
    };
    for (int p = 0; p < m; ++p) {
        if (partner[p] != -1) continue;
        int total = a.wind(p), end;
        int q = a.partner(p);
        if (q < m) end = q;
        else end = run(q - m, total);
        partner[p] = end;
        partner[end] = p;
        wind[p] = total;
        wind[end] = -total;
    }
    for (int p = 0; p < n; ++p) {
        int idx = m + p;
        if (partner[idx] != -1) continue;
        int total = b.wind(b.m() + p), end;
        int q = b.partner(b.m() + p);
        if (q >= b.m()) end = m + (q - b.m());
        else end = run_from_b(q, total);
        partner[idx] = end;
        partner[end] = idx;
        wind[idx] = total;
        wind[end] = -total;
    }
    int beta = 0, loops = a.loops() + b.loops();
    for (int j = 0; j < k; ++j) {
        if (seen[j]) continue;
        int total = 0, cur = j;
        do {
            seen[cur] = 1;
            int r = a.partner(a.m() + cur);
            total += a.wind(a.m() + cur);
            int q0 = r - a.m();
            seen[q0] = 1;
            int q = b.partner(q0);
            total += b.wind(q0);
            cur = q;
        } while (cur != j);
        if (total == 0) ++beta;
        else ++loops;
    }
    return {Diagram::from_strands(m, n, std::move(partner), std::move(wind), loops), beta};
}

WeightedDiagram compose(const WeightedDiagram& a, const WeightedDiagram& b) {
    WeightedDiagram r = compose(a.diagram, b.diagram);
    r.beta_power += a.beta_power + b.beta_power;
    return r;
}

WeightedDiagram compose_word(const std::vector<Diagram>& word) {
    if (word.empty()) throw SizeMismatch("empty word");
    WeightedDiagram r{word[0], 0};
    for (size_t i = 1; i < word.size(); ++i) r = compose(r, WeightedDiagram{word[i], 0});
    return r;
}

}  // namespace atl
