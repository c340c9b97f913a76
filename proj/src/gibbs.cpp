#include "projdim/gibbs.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace projdim {

GibbsSystem build_gibbs_system(const SlopeParam& s, const PerronOptions& opt) {
    const int q = s.q(), k = 2 * q - 1;
    GibbsSystem g{s, {}, IntMatrix(k, std::vector<int>(k, 0)), IntMatrix(k, std::vector<int>(k, 0)), {}, {}, {}};
    for (int j = -q + 1; j < q; ++j) g.digits.push_back(j);
    for (int bit = 0; bit < 2; ++bit) {
        auto& m = bit ? g.m1 : g.m0;
        for (int a = 0; a < k; ++a)
            for (auto d : kDAlphabet) {
                const int target = bit * q + 2 * g.digits[a] - scaled_value(d, s);
                if (target > -q && target < q) ++m[a][target + q - 1];
            }
    }

    Adjacency adj(k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            if (g.m0[a][b] + g.m1[a][b] > 0) adj[a].push_back(b);
    std::vector<char> seen(k, 0);
    std::vector<int> stack{q - 1};
    seen[q - 1] = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) seen[w] = 1, stack.push_back(w);
    }
    for (int a = 0; a < k; ++a)
        if (seen[a]) g.accessible.push_back(a);

    const int na = static_cast<int>(g.accessible.size());
    Eigen::MatrixXd block(na, na);
    Adjacency sub(na);
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < na; ++b) {
            const int v = g.m0[g.accessible[a]][g.accessible[b]] + g.m1[g.accessible[a]][g.accessible[b]];
            block(a, b) = v;
            if (v > 0) sub[a].push_back(b);
        }
    if (strongly_connected_components(sub).size() != 1)
        throw Error(ErrorKind::DegenerateEigenvector, "accessible block is reducible for " + s.label());
    // R feeds every cylinder mass, so it is refined well past the default.
    PerronOptions fine = opt;
    fine.tol = std::min(opt.tol, 1e-12);
    const auto pr = perron_irreducible(block, fine);
    if (!pr.converged) throw Error(ErrorKind::DegenerateEigenvector, "Perron iteration stalled for " + s.label());
    g.perron_value = pr.rho;
    g.R = Eigen::VectorXd::Zero(k);
    for (int a = 0; a < na; ++a) g.R(g.accessible[a]) = pr.vector(a);
    g.R /= g.R.sum();
    return g;
}

std::vector<BigInt> cylinder_row(const GibbsSystem& g, const BinaryWord& w) {
    const int k = g.size();
    std::vector<BigInt> v(k, 1), next(k);
    for (int bit : w) {
        const auto& m = g.m(bit);
        std::fill(next.begin(), next.end(), BigInt(0));
        for (int a = 0; a < k; ++a) {
            if (v[a] == 0) continue;
            for (int b = 0; b < k; ++b)
                if (m[a][b]) next[b] += v[a] * m[a][b];
        }
        v.swap(next);
    }
    return v;
}

namespace {

// 1 M_{w_from..} R, as a double.
double weight(const GibbsSystem& g, const BinaryWord& w, std::size_t from) {
    const int k = g.size();
    Eigen::VectorXd c = g.R;  // built right to left
    for (std::size_t i = w.size(); i-- > from;) {
        const auto& m = g.m(w[i]);
        Eigen::VectorXd out = Eigen::VectorXd::Zero(k);
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                if (m[a][b]) out(a) += m[a][b] * c(b);
        c = out;
    }
    return c.sum();
}

void check_bits(const BinaryWord& w) {
    for (int b : w)
        if (b != 0 && b != 1) throw Error(ErrorKind::InvalidArgument, "binary words use digits 0 and 1");
}

}  // namespace

double mu_bar_mass(const GibbsSystem& g, const BinaryWord& w) {
    check_bits(w);
    return weight(g, w, 0) / std::pow(3.0, static_cast<double>(w.size()));  // 1 R = 1
}

double phi_bar(const GibbsSystem& g, const BinaryWord& w) {
    check_bits(w);
    if (w.empty()) throw Error(ErrorKind::InvalidArgument, "phi_bar needs at least one digit");
    const double den = weight(g, w, 1);
    if (!(den > 0)) throw Error(ErrorKind::DegenerateDenominator, "tail weight is zero");
    return std::log(weight(g, w, 0) / den);
}

VariationCheck variation_bound_check(const GibbsSystem& g, const BinaryWord& w, std::size_t m) {
    if (m == 0 || m > w.size()) throw Error(ErrorKind::InvalidArgument, "need 1 <= m <= |w|");
    VariationCheck c;
    long long entries = 0;
    for (const auto& row : g.m(w[0]))
        for (int v : row) entries += v;
    c.bound = 2.0 * std::log(static_cast<double>(entries));
    const double full = phi_bar(g, w);
    for (std::size_t k = m; k <= w.size(); ++k) {
        const double part = phi_bar(g, BinaryWord(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k)));
        c.max_deviation = std::max(c.max_deviation, std::abs(full - part));
    }
    c.ok = c.max_deviation <= c.bound + 1e-12;
    return c;
}

std::vector<WeakGibbsPoint> weak_gibbs_constants(const GibbsSystem& g, std::size_t n_max) {
    if (n_max > kWeakGibbsCap)
        throw Error(ErrorKind::CapExceeded, "n=" + std::to_string(n_max) + " exceeds " + std::to_string(kWeakGibbsCap));
    const int k = g.size();
    std::vector<double> z(n_max + 1, 0.0), rmax(n_max + 1, 0.0), rmin(n_max + 1, INFINITY);
    // Depth-first over binary words keeping the row 1 M_w (exact in doubles
    // up to 3^20 * (2q-1)).
    std::vector<std::vector<double>> rows(n_max + 1, std::vector<double>(k));
    std::fill(rows[0].begin(), rows[0].end(), 1.0);
    auto rec = [&](auto&& self, std::size_t depth) -> void {
        if (depth == n_max) return;
        for (int bit = 0; bit < 2; ++bit) {
            const auto& m = g.m(bit);
            auto& out = rows[depth + 1];
            std::fill(out.begin(), out.end(), 0.0);
            for (int a = 0; a < k; ++a) {
                const double v = rows[depth][a];
                if (v == 0) continue;
                for (int b = 0; b < k; ++b)
                    if (m[a][b]) out[b] += v * m[a][b];
            }
            double maxc = 0.0, mass = 0.0;
            for (int b = 0; b < k; ++b) {
                maxc = std::max(maxc, out[b]);
                mass += out[b] * g.R(b);
            }
            const std::size_t n = depth + 1;
            z[n] += maxc;
            const double r = mass / maxc;  // 3^n mu[w] / max column
            rmax[n] = std::max(rmax[n], r);
            rmin[n] = std::min(rmin[n], r);
            self(self, depth + 1);
        }
    };
    rec(rec, 0);
    std::vector<WeakGibbsPoint> out;
    for (std::size_t n = 1; n <= n_max; ++n) {
        // ratio = mu[w] Z_n / maxc = r Z_n / 3^n
        const double scale = z[n] / std::pow(3.0, static_cast<double>(n));
        const double hi = rmax[n] * scale, lo = rmin[n] * scale;
        const double c = std::max(hi, 1.0 / lo);
        out.push_back({n, std::log(c) / static_cast<double>(n)});
    }
    return out;
}

std::string weak_gibbs_csv(const std::vector<WeakGibbsPoint>& seq) {
    std::ostringstream os;
    os << "n,log_C_n_over_n\n";
    char buf[64];
    for (const auto& p : seq) {
        std::snprintf(buf, sizeof buf, "%zu,%.15g\n", p.n, p.log_c_over_n);
        os << buf;
    }
    return os.str();
}

std::string cylinder_mass_csv(const GibbsSystem& g, std::size_t n) {
    if (n > kWeakGibbsCap)
        throw Error(ErrorKind::CapExceeded, "n=" + std::to_string(n) + " exceeds " + std::to_string(kWeakGibbsCap));
    std::ostringstream os;
    os << "word,mass\n";
    char buf[64];
    for (std::size_t code = 0; code < (std::size_t{1} << n); ++code) {
        BinaryWord w(n);
        std::string label;
        for (std::size_t i = 0; i < n; ++i) {
            w[i] = static_cast<int>((code >> (n - 1 - i)) & 1);
            label.push_back(static_cast<char>('0' + w[i]));
        }
        std::snprintf(buf, sizeof buf, ",%.15g\n", mu_bar_mass(g, w));
        os << label << buf;
    }
    return os.str();
}

}  // namespace projdim
