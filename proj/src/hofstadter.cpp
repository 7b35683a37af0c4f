#include "commdet/hofstadter.hpp"

#include "commdet/error.hpp"
#include "commdet/matrix_exp.hpp"
#include "commdet/singular_values.hpp"
#include "commdet/spectral.hpp"

#include <cmath>
#include <numeric>

namespace commdet {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

void HofstadterConfig::validate() const {
    if (p <= 0 || q <= 1 || p >= q)
        throw Error(ErrorKind::BadArgument, "HofstadterConfig: need 0 < p < q");
    if (std::gcd(p, q) != 1)
        throw Error(ErrorKind::BadArgument, "HofstadterConfig: p/q must be in lowest terms");
    if (L < 6 * q)
        throw Error(ErrorKind::BadArgument, "HofstadterConfig: L must be at least 6q");
    if (band < 1 || band > q)
        throw Error(ErrorKind::BadArgument, "HofstadterConfig: band index out of range");
    if (window_radii.empty())
        throw Error(ErrorKind::BadArgument, "HofstadterConfig: no window radii");
    for (size_t k = 0; k < window_radii.size(); ++k) {
        if (window_radii[k] < 1 ||
            (k > 0 && window_radii[k] <= window_radii[k - 1]))
            throw Error(ErrorKind::BadArgument,
                        "HofstadterConfig: radii must be increasing and positive");
        if (3 * window_radii[k] > L)
            throw Error(ErrorKind::RadiusTooLarge,
                        "HofstadterConfig: window radius " + std::to_string(window_radii[k]) +
                            " exceeds L/3 (edge contamination)");
    }
}

DenseMatrix hofstadter_hamiltonian(int L, int p, int q) {
    const int n = L * L;
    DenseMatrix h(n);
    const double flux = static_cast<double>(p) / q;
    for (int y = 0; y < L; ++y) {
        for (int x = 0; x < L; ++x) {
            const int s = x + L * y;
            if (x + 1 < L) {
                h(s, s + 1) = -1.0;
                h(s + 1, s) = -1.0;
            }
            if (y + 1 < L) {
                const Complex t = -std::polar(1.0, kTwoPi * flux * x);
                h(s, s + L) = t;
                h(s + L, s) = std::conj(t);
            }
        }
    }
    return h;
}

double lattice_center(int L) { return std::ceil(L / 2.0) - 0.5; }

std::vector<Complex> half_plane_indicator_x(int L) {
    std::vector<Complex> d(static_cast<size_t>(L) * L, 0.0);
    const double c = lattice_center(L);
    for (int y = 0; y < L; ++y)
        for (int x = 0; x < L; ++x)
            if (x > c) d[x + static_cast<size_t>(L) * y] = 1.0;
    return d;
}

std::vector<Complex> half_plane_indicator_y(int L) {
    std::vector<Complex> d(static_cast<size_t>(L) * L, 0.0);
    const double c = lattice_center(L);
    for (int y = 0; y < L; ++y)
        for (int x = 0; x < L; ++x)
            if (y > c) d[x + static_cast<size_t>(L) * y] = 1.0;
    return d;
}

std::vector<int> window_sites(int L, int radius) {
    const double c = lattice_center(L);
    std::vector<int> sites;
    for (int y = 0; y < L; ++y)
        for (int x = 0; x < L; ++x)
            if (std::abs(x - c) <= radius && std::abs(y - c) <= radius)
                sites.push_back(x + L * y);
    return sites;
}

double kitaev_local_marker(const DenseMatrix& p, int L, int q, int radius, ExecPolicy policy) {
    if (p.dim() != L * L)
        throw Error(ErrorKind::DimensionMismatch, "kitaev_local_marker: projector is not L^2");
    const double c = lattice_center(L);
    if (radius + q > (L - 1) / 2.0)
        throw Error(ErrorKind::RadiusTooLarge,
                    "kitaev_local_marker: radius " + std::to_string(radius) +
                        " leaves margin < q");

    // Counterclockwise 120-degree sectors around the center.
    std::vector<int> sectors[3];
    for (int y = 0; y < L; ++y)
        for (int x = 0; x < L; ++x) {
            const double dx = x - c, dy = y - c;
            if (dx * dx + dy * dy > static_cast<double>(radius) * radius) continue;
            double theta = std::atan2(dy, dx);
            if (theta < 0.0) theta += kTwoPi;
            const int sec = std::min(2, static_cast<int>(theta / (kTwoPi / 3.0)));
            sectors[sec].push_back(x + L * y);
        }

    const auto& sa = sectors[0];
    const auto& sb = sectors[1];
    const auto& sc = sectors[2];
    const int na = static_cast<int>(sa.size());
    std::vector<double> partial(na, 0.0);
    const bool par = policy == ExecPolicy::Parallel;
#pragma omp parallel for schedule(dynamic, 4) if (par)
    for (int ja = 0; ja < na; ++ja) {
        const int j = sa[ja];
        double acc = 0.0;
        for (int k : sb) {
            const Complex pjk = p(j, k);
            if (pjk == Complex(0.0)) continue;
            for (int l : sc) acc += std::imag(pjk * p(k, l) * p(l, j));
        }
        partial[ja] = acc;
    }
    double total = 0.0;
    for (double t : partial) total += t;
    return -24.0 * (kTwoPi / 2.0) * total; // -24 pi Im sum
}

namespace {

DenseMatrix scale_columns(const DenseMatrix& m, const std::vector<Complex>& d) {
    DenseMatrix r = m;
    const int n = m.dim();
    for (int i = 0; i < n; ++i) {
        Complex* row = r.row(i);
        for (int j = 0; j < n; ++j) row[j] *= d[j];
    }
    return r;
}

} // namespace

ChernReport chern_trace_analysis(const DenseMatrix& p, const HofstadterConfig& cfg, double fermi,
                                 double gap, ExecPolicy policy) {
    cfg.validate();
    const int L = cfg.L;
    if (p.dim() != L * L)
        throw Error(ErrorKind::DimensionMismatch, "chern_trace_analysis: projector is not L^2");

    ChernReport rep;
    rep.cfg = cfg;
    rep.fermi = fermi;
    rep.gap = gap;

    const std::vector<Complex> xd = half_plane_indicator_x(L);
    const std::vector<Complex> yd = half_plane_indicator_y(L);
    const DenseMatrix pxp = matmul(scale_columns(p, xd), p, policy);
    const DenseMatrix pyp = matmul(scale_columns(p, yd), p, policy);
    const DenseMatrix comm = matmul(pxp, pyp, policy) - matmul(pyp, pxp, policy);

    for (int r : cfg.window_radii) {
        Complex sum = 0.0;
        for (int s : window_sites(L, r)) sum += comm(s, s);
        const Complex nu = Complex(0.0, kTwoPi) * sum;
        rep.window_values.emplace_back(r, nu.real());
    }
    rep.nu = rep.window_values.back().second;
    rep.nu_rounded = static_cast<int>(std::lround(rep.nu));
    rep.marker = kitaev_local_marker(p, L, cfg.q, cfg.window_radii.back(), policy);

    // Trace-class diagnostic: singular partial sums of (e^A - 1)(e^B - 1)
    // with A = 2 pi i PXP, B = 2 pi i PYP.
    const Complex tpi(0.0, kTwoPi);
    const DenseMatrix ea = mat_exp(tpi * pxp, policy);
    const DenseMatrix eb = mat_exp(tpi * pyp, policy);
    const DenseMatrix id = DenseMatrix::identity(p.dim());
    const DenseMatrix m = matmul(ea - id, eb - id, policy);
    std::vector<std::pair<int, double>> partials;
    for (int r : cfg.window_radii) {
        const std::vector<int> sites = window_sites(L, r);
        partials.emplace_back(static_cast<int>(sites.size()),
                              trace_norm(m.restricted(sites), policy));
    }
    rep.trace_class_partials = classify_partials(std::move(partials), 1e-2);

    rep.pass = std::abs(rep.nu - rep.nu_rounded) <= cfg.tolerance &&
               std::abs(rep.nu - rep.marker) <= cfg.tolerance;
    return rep;
}

ChernReport exp_hofstadter_chern(const HofstadterConfig& cfg) {
    cfg.validate();
    const ExecPolicy policy = default_policy();
    const int n = cfg.L * cfg.L;

    const DenseMatrix h = hofstadter_hamiltonian(cfg.L, cfg.p, cfg.q);
    EigResult eig = hermitian_eig(h, policy);

    double fermi;
    if (cfg.fermi) {
        fermi = *cfg.fermi;
    } else {
        const int cut = static_cast<int>((static_cast<long>(n) * cfg.band) / cfg.q);
        fermi = cut >= n ? eig.values.back() + 1.0
                         : 0.5 * (eig.values[cut - 1] + eig.values[cut]);
    }

    int occupied = 0;
    double below = -1e300, above = 1e300;
    for (double e : eig.values) {
        if (e < fermi) {
            ++occupied;
            below = std::max(below, e);
        } else {
            above = std::min(above, e);
        }
    }
    const double gap = (occupied == 0 || occupied == n) ? 1e9 : above - below;
    const double residual = 1e-8 * h.one_norm();
    if (gap <= cfg.gap_floor_factor * residual)
        throw Error(ErrorKind::GapTooSmall,
                    "exp_hofstadter_chern: spectral gap " + std::to_string(gap) +
                        " below " + std::to_string(cfg.gap_floor_factor) + "x residual");

    DenseMatrix p;
    if (occupied == 0) {
        p = DenseMatrix(n);
    } else if (occupied == n) {
        p = DenseMatrix::identity(n);
    } else {
        p = spectral_projector(eig, fermi, policy);
    }
    return chern_trace_analysis(p, cfg, fermi, gap, policy);
}

} // namespace commdet
