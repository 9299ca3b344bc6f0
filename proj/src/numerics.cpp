#include "dwell/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dwell/errors.hpp"

namespace dwell::num {

namespace {

// G7K15 nodes/weights on [-1,1]: {node, gauss weight, kronrod weight}.
constexpr double kGK[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0, 0.204432940075298},
    {0.586087235467691, 0.0, 0.169004726639267},
    {0.864864423359769, 0.0, 0.104790010322250},
    {0.991455371120813, 0.0, 0.022935322010529}};

struct Panel {
  double a, b, value, error;
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double m = 0.5 * (b - a);
  const double f0 = f(c);
  double g7 = kGK[0][1] * f0;
  double k15 = kGK[0][2] * f0;
  for (int i = 1; i < 8; ++i) {
    const double dx = m * kGK[i][0];
    const double fi = f(c + dx) + f(c - dx);
    g7 += kGK[i][1] * fi;
    k15 += kGK[i][2] * fi;
  }
  g7 *= m;
  k15 *= m;
  const double diff = std::abs(k15 - g7);
  const double err = (diff > 0.0) ? std::min(200.0 * diff, std::pow(200.0 * diff, 1.5)) : 0.0;
  return {a, b, k15, err};
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol,
                 double abs_tol, int max_intervals) {
  if (a == b) return 0.0;
  auto worse = [](const Panel& x, const Panel& y) { return x.error < y.error; };
  std::vector<Panel> heap;
  heap.push_back(gk15(f, a, b));
  int n = 1;
  while (true) {
    double total = 0.0, total_err = 0.0;
    for (const Panel& q : heap) {
      total += q.value;
      total_err += q.error;
    }
    if (total_err <= std::max(abs_tol, rel_tol * std::abs(total))) return total;
    if (n >= max_intervals)
      fail(errc::convergence_error, "integrate: interval budget exhausted");
    std::pop_heap(heap.begin(), heap.end(), worse);
    Panel p = heap.back();
    heap.pop_back();
    const double mid = 0.5 * (p.a + p.b);
    heap.push_back(gk15(f, p.a, mid));
    std::push_heap(heap.begin(), heap.end(), worse);
    heap.push_back(gk15(f, mid, p.b));
    std::push_heap(heap.begin(), heap.end(), worse);
    ++n;
  }
}

double find_root(const std::function<double(double)>& f, double lo, double hi, double xtol) {
  double a = lo, b = hi;
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0) == (fb > 0)) fail(errc::domain_error, "find_root: endpoints do not bracket");
  double c = a, fc = fa;
  double d = b - a, e = b - a;
  for (int it = 0; it < 200; ++it) {
    if ((fb > 0) == (fc > 0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 0.5 * xtol;
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol || fb == 0.0) return b;
    if (std::abs(e) >= tol && std::abs(fa) > std::abs(fb)) {
      double p, q, r;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        q = fa / fc;
        r = fb / fc;
        p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
        q = (q - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::abs(d) > tol) ? d : (xm > 0 ? tol : -tol);
    fb = f(b);
  }
  return b;
}

double newton_bracketed(const std::function<double(double)>& f,
                        const std::function<double(double)>& df, double lo, double hi,
                        double ftol, double xtol) {
  double a = lo, b = hi;
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0) == (fb > 0))
    fail(errc::domain_error, "newton_bracketed: endpoints do not bracket");
  double x = 0.5 * (a + b);
  for (int it = 0; it < 120; ++it) {
    const double fx = f(x);
    if (std::abs(fx) <= ftol) return x;
    if ((fx > 0) == (fa > 0)) {
      a = x;
      fa = fx;
    } else {
      b = x;
      fb = fx;
    }
    const double dfx = df(x);
    double xn = (dfx != 0.0) ? x - fx / dfx : 0.5 * (a + b);
    if (!(xn > a && xn < b)) xn = 0.5 * (a + b);
    if (std::abs(xn - x) < xtol * (1.0 + std::abs(x))) return xn;
    x = xn;
  }
  return x;
}

std::pair<double, double> find_min(const std::function<double(double)>& f, double lo,
                                   double hi, double xtol) {
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > xtol * (1.0 + std::abs(a) + std::abs(b))) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = f(x2);
    }
  }
  const double xm = 0.5 * (a + b);
  return {xm, f(xm)};
}

int sturm_count(std::span<const double> d, std::span<const double> e, double x) {
  const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
  int count = 0;
  double q = d[0] - x;
  if (q < 0) ++count;
  for (std::size_t i = 1; i < d.size(); ++i) {
    if (q == 0.0) q = tiny;
    q = d[i] - x - e[i - 1] * e[i - 1] / q;
    if (q < 0) ++count;
  }
  return count;
}

std::vector<double> lowest_eigenvalues(std::span<const double> d, std::span<const double> e,
                                       int k) {
  const std::size_t n = d.size();
  double lo = d[0], hi = d[0];
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(e[i - 1]);
    if (i + 1 < n) r += std::abs(e[i]);
    lo = std::min(lo, d[i] - r);
    hi = std::max(hi, d[i] + r);
  }
  std::vector<double> vals(k);
  const double eps = std::numeric_limits<double>::epsilon();
  for (int j = 0; j < k; ++j) {
    double a = lo, b = hi;
    for (int it = 0; it < 200; ++it) {
      const double m = 0.5 * (a + b);
      if (m == a || m == b) break;
      if (sturm_count(d, e, m) > j)
        b = m;
      else
        a = m;
      if (b - a <= eps * (std::abs(a) + std::abs(b))) break;
    }
    vals[j] = 0.5 * (a + b);
    lo = vals[j]; // eigenvalues are ordered
  }
  return vals;
}

namespace {

// LU of (T - lambda I) with partial pivoting; T symmetric tridiagonal (d, e).
struct TridiagLU {
  std::vector<double> u0, u1, u2, l;
  std::vector<char> piv;

  TridiagLU(std::span<const double> d, std::span<const double> e, double lambda) {
    const std::size_t n = d.size();
    u0.resize(n);
    u1.assign(n, 0.0);
    u2.assign(n, 0.0);
    l.assign(n, 0.0);
    piv.assign(n, 0);
    std::vector<double> dd(n), du(n, 0.0);
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      dd[i] = d[i] - lambda;
      norm = std::max(norm, std::abs(dd[i]));
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
      du[i] = e[i];
      norm = std::max(norm, std::abs(e[i]));
    }
    const double tiny = norm * std::numeric_limits<double>::epsilon() * 1e-3 + 1e-300;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      const double sub = e[i];
      if (std::abs(dd[i]) >= std::abs(sub)) {
        if (dd[i] == 0.0) dd[i] = tiny;
        const double m = sub / dd[i];
        l[i] = m;
        piv[i] = 0;
        u0[i] = dd[i];
        u1[i] = du[i];
        u2[i] = 0.0;
        dd[i + 1] -= m * du[i];
      } else {
        const double m = dd[i] / sub;
        l[i] = m;
        piv[i] = 1;
        const double next_du = (i + 2 < n) ? du[i + 1] : 0.0;
        u0[i] = sub;
        u1[i] = dd[i + 1];
        u2[i] = next_du;
        dd[i + 1] = du[i] - m * dd[i + 1];
        if (i + 2 < n) du[i + 1] = -m * next_du;
      }
    }
    u0[n - 1] = (std::abs(dd[n - 1]) > tiny) ? dd[n - 1] : tiny;
  }

  void solve(std::vector<double>& x) const {
    const std::size_t n = u0.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (piv[i]) std::swap(x[i], x[i + 1]);
      x[i + 1] -= l[i] * x[i];
    }
    for (std::size_t ii = n; ii-- > 0;) {
      double s = x[ii];
      if (ii + 1 < n) s -= u1[ii] * x[ii + 1];
      if (ii + 2 < n) s -= u2[ii] * x[ii + 2];
      x[ii] = s / u0[ii];
    }
  }
};

} // namespace

std::vector<double> inverse_iteration(std::span<const double> d, std::span<const double> e,
                                      double lambda,
                                      const std::vector<std::vector<double>>& prev) {
  const std::size_t n = d.size();
  TridiagLU lu(d, e, lambda);
  std::vector<double> v(n);
  unsigned long long state =
      0x9E3779B97F4A7C15ull ^ static_cast<unsigned long long>(std::llabs(
          static_cast<long long>(lambda * 1048576.0)) + 1315423911ull * n);
  auto rnd = [&]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return static_cast<double>(state % 100000) / 50000.0 - 1.0;
  };
  for (std::size_t i = 0; i < n; ++i) v[i] = rnd();
  auto orthonormalize = [&]() {
    for (const auto& p : prev) {
      double dot = 0.0;
      for (std::size_t i = 0; i < n; ++i) dot += v[i] * p[i];
      for (std::size_t i = 0; i < n; ++i) v[i] -= dot * p[i];
    }
    double nn = 0.0;
    for (double x : v) nn += x * x;
    nn = std::sqrt(nn);
    if (nn == 0.0) fail(errc::convergence_error, "inverse_iteration: degenerate start");
    for (double& x : v) x /= nn;
  };
  orthonormalize();
  for (int it = 0; it < 4; ++it) {
    lu.solve(v);
    orthonormalize();
  }
  return v;
}

} // namespace dwell::num
