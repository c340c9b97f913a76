#include "projdim/subshift.hpp"

#include "projdim/automaton.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

namespace projdim {

int SubshiftPresentation::index_of(int state) const {
    auto it = std::lower_bound(states.begin(), states.end(), state);
    if (it == states.end() || *it != state) return -1;
    return static_cast<int>(it - states.begin());
}

std::optional<int> SubshiftPresentation::step(int state, BSymbol b) const {
    const int t = 2 * state - slope.p() * b.x + slope.q() * b.y;
    return index_of(t) >= 0 && index_of(state) >= 0 ? std::optional<int>(t) : std::nullopt;
}

SubshiftPresentation build_line_subshift(const SlopeParam& s) {
    const int p = s.p(), q = s.q();
    std::set<int> keep;
    for (int m = -q; m <= p; ++m) keep.insert(m);
    // Trim until every state has an incoming and an outgoing edge.
    for (bool changed = true; changed;) {
        changed = false;
        std::set<int> has_in, has_out;
        for (int m : keep)
            for (auto b : kBAlphabet) {
                const int t = 2 * m - p * b.x + q * b.y;
                if (keep.count(t)) {
                    has_out.insert(m);
                    has_in.insert(t);
                }
            }
        for (auto it = keep.begin(); it != keep.end();) {
            if (!has_in.count(*it) || !has_out.count(*it)) {
                it = keep.erase(it);
                changed = true;
            } else {
                ++it;
            }
        }
    }
    SubshiftPresentation sp{s, {keep.begin(), keep.end()}, {}};
    for (int m : sp.states)
        for (auto b : kBAlphabet) {
            const int t = 2 * m - p * b.x + q * b.y;
            if (keep.count(t)) sp.edges.push_back({m, b, t});
        }
    return sp;
}

bool admissible(const SubshiftPresentation& sp, const BWord& z) {
    std::vector<int> cur = sp.states;
    for (auto b : z) {
        std::vector<int> next;
        for (int m : cur)
            if (auto t = sp.step(m, b)) next.push_back(*t);
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        if (next.empty()) return false;
        cur.swap(next);
    }
    return true;
}

namespace {

struct SquareRange {
    BigInt lo, hi, scale;
};

// p x - q y over the closed square of z spans [lo, hi] / 2^n.
SquareRange square_range(const SlopeParam& s, const BWord& z) {
    BigInt i = 0, j = 0;
    for (auto b : z) {
        i = 2 * i + b.x;
        j = 2 * j + b.y;
    }
    return {s.p() * i - s.q() * (j + 1), s.p() * (i + 1) - s.q() * j, BigInt(1) << z.size()};
}

// Smallest multiple of m that is >= v (m > 0).
BigInt ceil_multiple(const BigInt& v, const BigInt& m) {
    BigInt k = v / m;
    if (k * m < v) k += 1;
    return k * m;
}

}  // namespace

bool geometric_cylinder_test(const SlopeParam& s, const BWord& z, SquareTest mode) {
    const auto r = square_range(s, z);
    if (mode == SquareTest::Closed) return ceil_multiple(r.lo, r.scale) <= r.hi;
    return ceil_multiple(r.lo + 1, r.scale) <= r.hi - 1;
}

bool corner_touch(const SlopeParam& s, const BWord& z) {
    return geometric_cylinder_test(s, z, SquareTest::Closed) && !geometric_cylinder_test(s, z, SquareTest::Open);
}

namespace {

using Row = std::array<BigInt, 4>;

// Deterministic automaton over subsets of presentation states.
struct SubsetAutomaton {
    std::vector<std::vector<int>> subsets;
    std::vector<std::array<int, 4>> next;  // -1 for the empty subset
};

SubsetAutomaton determinize(const SubshiftPresentation& sp) {
    SubsetAutomaton d;
    std::map<std::vector<int>, int> id;
    d.subsets.push_back(sp.states);
    id[sp.states] = 0;
    for (std::size_t k = 0; k < d.subsets.size(); ++k) {
        std::array<int, 4> out{-1, -1, -1, -1};
        for (auto b : kBAlphabet) {
            std::vector<int> t;
            for (int m : d.subsets[k])
                if (auto x = sp.step(m, b)) t.push_back(*x);
            std::sort(t.begin(), t.end());
            t.erase(std::unique(t.begin(), t.end()), t.end());
            if (t.empty()) continue;
            auto [it, fresh] = id.emplace(t, static_cast<int>(d.subsets.size()));
            if (fresh) d.subsets.push_back(t);
            out[b.index()] = it->second;
        }
        d.next.push_back(out);
    }
    return d;
}

void row_times(Row& v, const TransferMatrix4& m) {
    Row out{};
    for (int k = 0; k < 4; ++k) {
        if (v[k] == 0) continue;
        for (int j = 0; j < 4; ++j)
            if (m(k, j)) out[j] += v[k] * m(k, j);
    }
    v = std::move(out);
}

BigInt max_column_sum(const SubsetAutomaton& d, std::size_t n) {
    BigInt total = 0;
    auto rec = [&](auto&& self, int state, const Row& v, std::size_t depth) -> void {
        if (depth == n) {
            total += *std::max_element(v.begin(), v.end());
            return;
        }
        for (int b = 0; b < 4; ++b) {
            const int t = d.next[state][b];
            if (t < 0) continue;
            Row w = v;
            row_times(w, a_matrix(BSymbol::from_index(b)));
            self(self, t, w, depth + 1);
        }
    };
    rec(rec, 0, Row{1, 1, 1, 1}, 0);
    return total;
}

}  // namespace

std::vector<PressureEstimate> pressure_sequence(const SlopeParam& s, std::size_t n_max, bool with_max_column) {
    if (n_max > kPressureCap)
        throw Error(ErrorKind::CapExceeded, "n=" + std::to_string(n_max) + " exceeds cap " + std::to_string(kPressureCap));
    const auto sp = build_line_subshift(s);
    const auto d = determinize(sp);
    const std::size_t k = d.subsets.size();
    std::vector<Row> cur(k), next(k);
    std::vector<char> live(k, 0), next_live(k, 0);
    cur[0] = Row{1, 1, 1, 1};
    live[0] = 1;
    std::vector<PressureEstimate> out;
    for (std::size_t n = 1; n <= n_max; ++n) {
        for (auto& r : next) r = Row{};
        std::fill(next_live.begin(), next_live.end(), 0);
        for (std::size_t i = 0; i < k; ++i) {
            if (!live[i]) continue;
            for (int b = 0; b < 4; ++b) {
                const int t = d.next[i][b];
                if (t < 0) continue;
                Row v = cur[i];
                row_times(v, a_matrix(BSymbol::from_index(b)));
                for (int j = 0; j < 4; ++j) next[t][j] += v[j];
                next_live[t] = 1;
            }
        }
        cur.swap(next);
        live.swap(next_live);
        PressureEstimate e;
        e.n = n;
        for (std::size_t i = 0; i < k; ++i) {
            e.lower_sum += cur[i][0];
            e.full_sum += cur[i][0] + cur[i][1] + cur[i][2] + cur[i][3];
        }
        e.lower = log_big(e.lower_sum) / n;
        e.full = log_big(e.full_sum) / n;
        if (with_max_column && n <= kMaxColumnCap) e.max_column = log_big(max_column_sum(d, n)) / n;
        out.push_back(std::move(e));
    }
    return out;
}

PressureEstimate pressure_partial(const SlopeParam& s, std::size_t n) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "n must be positive");
    auto seq = pressure_sequence(s, n, true);
    return seq.back();
}

Eigen::MatrixXd tensor_operator(const SubshiftPresentation& sp) {
    const int k = static_cast<int>(sp.states.size());
    Eigen::MatrixXd theta = Eigen::MatrixXd::Zero(4 * k, 4 * k);
    for (const auto& e : sp.edges) {
        const int a = sp.index_of(e.from), b = sp.index_of(e.to);
        const auto& m = a_matrix(e.label);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) theta(4 * a + i, 4 * b + j) += m(i, j);
    }
    return theta;
}

PressureEstimate spectral_pressure(const SlopeParam& s, const PerronOptions& opt) {
    PressureEstimate e;
    e.spectral = log_enclosure(spectral_radius(tensor_operator(build_line_subshift(s)), opt));
    return e;
}

PressureGap pressure_gap_check(const SlopeParam& s, const PerronOptions& opt) {
    PressureGap g;
    g.N = overlap_growth(build_overlap_automaton(s), opt);
    g.P = *spectral_pressure(s, opt).spectral;
    g.ok = g.N.upper <= g.P.lower + 1e-6;
    return g;
}

std::string to_dot(const SubshiftPresentation& sp) {
    std::ostringstream os;
    os << "digraph line_" << sp.slope.p() << "_" << sp.slope.q() << " {\n";
    for (int m : sp.states) os << "  \"" << m << "\";\n";
    for (const auto& e : sp.edges)
        os << "  \"" << e.from << "\" -> \"" << e.to << "\" [label=\"" << int(e.label.x) << int(e.label.y)
           << "\"];\n";
    os << "}\n";
    return os.str();
}

std::string pressure_csv(const std::vector<PressureEstimate>& seq) {
    std::ostringstream os;
    os << "n,L_n,S_n\n";
    char buf[96];
    for (const auto& e : seq) {
        std::snprintf(buf, sizeof buf, "%zu,%.15g,%.15g\n", e.n, e.lower, e.full);
        os << buf;
    }
    return os.str();
}

}  // namespace projdim
