#include "scoin/symfunc/symfn.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "scoin/core/errors.hpp"
#include "scoin/exactalg/poly_matrix.hpp"

namespace scoin::sym {

std::string_view to_string(Basis b) {
  switch (b) {
    case Basis::m: return "m";
    case Basis::e: return "e";
    case Basis::s: return "s";
  }
  return "?";
}

Basis parse_basis(std::string_view name) {
  if (name == "m") return Basis::m;
  if (name == "e") return Basis::e;
  if (name == "s") return Basis::s;
  throw std::invalid_argument("unknown symmetric function basis: " + std::string(name));
}

SymFn::SymFn(int degree, Basis basis) : n_(degree), basis_(basis) {
  if (degree < 0) throw std::invalid_argument("SymFn: negative degree");
}

SymFn SymFn::basis_element(Basis basis, const Partition& lambda, const QZPoly& c) {
  SymFn f(lambda.size(), basis);
  f.add(lambda, c);
  return f;
}

QZPoly SymFn::coefficient(const Partition& lambda) const {
  auto it = coeffs_.find(lambda);
  return it == coeffs_.end() ? QZPoly() : it->second;
}

void SymFn::add(const Partition& lambda, const QZPoly& c) {
  if (lambda.size() != n_) throw std::invalid_argument("SymFn: index partition has the wrong size");
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

SymFn& SymFn::operator+=(const SymFn& o) {
  SymFn other = o.basis_ == basis_ ? o : to_basis(o, basis_);
  if (other.n_ != n_) throw std::invalid_argument("SymFn: degree mismatch");
  for (const auto& [l, c] : other.coeffs_) add(l, c);
  return *this;
}

SymFn& SymFn::operator-=(const SymFn& o) {
  SymFn other = o.basis_ == basis_ ? o : to_basis(o, basis_);
  if (other.n_ != n_) throw std::invalid_argument("SymFn: degree mismatch");
  for (const auto& [l, c] : other.coeffs_) add(l, -c);
  return *this;
}

SymFn operator*(const QZPoly& c, const SymFn& f) {
  SymFn r(f.n_, f.basis_);
  for (const auto& [l, v] : f.coeffs_) r.add(l, c * v);
  return r;
}

bool operator==(const SymFn& a, const SymFn& b) {
  if (a.n_ != b.n_) return a.is_zero() && b.is_zero();
  if (a.basis_ == b.basis_) return a.coeffs_ == b.coeffs_;
  return to_basis(a, Basis::s).coeffs_ == to_basis(b, Basis::s).coeffs_;
}

SymFn SymFn::z_slice(int j) const {
  SymFn r(n_, basis_);
  for (const auto& [l, c] : coeffs_) r.add(l, c.z_slice(j));
  return r;
}

SymFn SymFn::at_q1() const {
  SymFn r(n_, basis_);
  for (const auto& [l, c] : coeffs_) r.add(l, QZPoly(c.eval(1, 1)));
  return r;
}

namespace {

std::string index_string(const Partition& p) {
  std::ostringstream os;
  bool wide = std::any_of(p.parts().begin(), p.parts().end(), [](int x) { return x > 9; });
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (wide && i) os << ",";
    os << p.parts()[i];
  }
  return os.str();
}

std::string render(const SymFn& f, bool latex) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // largest partitions first
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    const auto& [l, c] = *it;
    if (!first) os << " + ";
    first = false;
    std::string idx = index_string(l);
    os << to_string(f.basis()) << "_{" << (idx.empty() ? (latex ? "\\varnothing" : "()") : idx) << "}";
    if (!(c == QZPoly(1))) {
      std::string cs = latex ? c.to_latex() : c.to_string();
      os << (latex ? " \\cdot (" : "*(") << cs << ")";
    }
  }
  return os.str();
}

}  // namespace

std::string SymFn::to_string() const { return render(*this, false); }
std::string SymFn::to_latex() const { return render(*this, true); }

std::int64_t kostka_cached(const Partition& lambda, const Partition& mu) {
  static std::mutex mtx;
  static std::map<std::pair<Partition, Partition>, std::int64_t> cache;
  std::lock_guard lock(mtx);
  auto key = std::pair(lambda, mu);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  std::int64_t v = comb::kostka(lambda, mu);
  cache.emplace(key, v);
  return v;
}

std::int64_t e_to_m_coefficient(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size()) throw std::invalid_argument("e_to_m_coefficient: sizes differ");
  std::vector<int> cap(lambda.parts());
  std::function<std::int64_t(int)> rows = [&](int r) -> std::int64_t {
    if (r == mu.length()) {
      return std::all_of(cap.begin(), cap.end(), [](int c) { return c == 0; }) ? 1 : 0;
    }
    std::int64_t total = 0;
    // choose mu_r distinct columns with remaining capacity
    std::function<void(std::size_t, int)> pick = [&](std::size_t col, int left) {
      if (left == 0) {
        total += rows(r + 1);
        return;
      }
      if (col == cap.size()) return;
      if (cap[col] > 0) {
        --cap[col];
        pick(col + 1, left - 1);
        ++cap[col];
      }
      pick(col + 1, left);
    };
    pick(0, mu.part(r));
    return total;
  };
  return rows(0);
}

namespace {

SymFn to_schur(const SymFn& f) {
  int n = f.degree();
  SymFn out(n, Basis::s);
  switch (f.basis()) {
    case Basis::s:
      return f;
    case Basis::e:
      for (const auto& [mu, b] : f.coeffs()) {
        for (const auto& lambda : comb::partitions_of(n)) {
          std::int64_t k = kostka_cached(lambda.conjugate(), mu);
          if (k) out.add(lambda, QZPoly(k) * b);
        }
      }
      return out;
    case Basis::m: {
      // unitriangular solve; partitions_of lists a linear extension of dominance, largest first
      auto parts = comb::partitions_of(n);
      for (const auto& mu : parts) {
        QZPoly c = f.coefficient(mu);
        for (const auto& [lambda, cl] : out.coeffs()) {
          if (lambda > mu) c -= QZPoly(kostka_cached(lambda, mu)) * cl;
        }
        if (kostka_cached(mu, mu) != 1) throw IntegrityError("Kostka matrix is not unitriangular");
        out.add(mu, c);
      }
      return out;
    }
  }
  return out;
}

SymFn from_schur(const SymFn& f, Basis target) {
  int n = f.degree();
  SymFn out(n, target);
  switch (target) {
    case Basis::s:
      return f;
    case Basis::m:
      for (const auto& [lambda, c] : f.coeffs()) {
        for (const auto& mu : comb::partitions_of(n)) {
          std::int64_t k = kostka_cached(lambda, mu);
          if (k) out.add(mu, QZPoly(k) * c);
        }
      }
      return out;
    case Basis::e: {
      auto parts = comb::partitions_of(n);
      std::reverse(parts.begin(), parts.end());
      for (const auto& nu : parts) {
        QZPoly b = f.coefficient(nu.conjugate());
        for (const auto& [mu, bm] : out.coeffs()) {
          if (mu < nu) b -= QZPoly(kostka_cached(nu, mu)) * bm;
        }
        out.add(nu, b);
      }
      return out;
    }
  }
  return out;
}

}  // namespace

SymFn to_basis(const SymFn& f, Basis target) {
  if (f.basis() == target) return f;
  return from_schur(to_schur(f), target);
}

QZPoly hall(const SymFn& f, const SymFn& g) {
  if (f.degree() != g.degree()) throw std::invalid_argument("hall: degree mismatch");
  SymFn a = to_basis(f, Basis::s), b = to_basis(g, Basis::s);
  QZPoly r;
  for (const auto& [l, c] : a.coeffs()) r += c * b.coefficient(l);
  return r;
}

QZPoly e_perp(const Partition& mu, const SymFn& f) {
  if (mu.size() != f.degree()) throw std::invalid_argument("e_perp: |mu| must equal the degree");
  SymFn a = to_basis(f, Basis::s);
  QZPoly r;
  for (const auto& [l, c] : a.coeffs()) r += QZPoly(kostka_cached(l.conjugate(), mu)) * c;
  return r;
}

SymFn e1_perp(const SymFn& f) {
  if (f.degree() < 1) throw std::invalid_argument("e1_perp: degree must be positive");
  SymFn a = to_basis(f, Basis::s);
  SymFn r(f.degree() - 1, Basis::s);
  for (const auto& [l, c] : a.coeffs()) {
    std::vector<int> p = l.parts();
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i + 1 < p.size() && p[i + 1] == p[i]) continue;  // not a corner
      std::vector<int> q = p;
      if (--q[i] == 0) q.pop_back();
      r.add(Partition(q), c);
    }
  }
  return to_basis(r, f.basis());
}

SymFn omega(const SymFn& f) {
  SymFn a = to_basis(f, Basis::s);
  SymFn r(f.degree(), Basis::s);
  for (const auto& [l, c] : a.coeffs()) r.add(l.conjugate(), c);
  return to_basis(r, f.basis());
}

SymFn cnk_syt(int n, int k) {
  if (k < 1 || k > n) throw std::invalid_argument("cnk_syt: need 1 <= k <= n");
  int r = n - k;
  SymFn out(n, Basis::s);
  for (const auto& t : comb::enumerate_syt(n)) {
    int d = t.des();
    if (d < r) continue;
    int e = t.maj() + r * (r - 1) / 2 - r * d;
    if (e < 0) throw IntegrityError("cnk_syt: negative q exponent");
    out.add(t.shape, QZPoly::q_power(e) * comb::q_binomial(d, r));
  }
  return out;
}

SymFn cnk_omp(int n, int k, comb::OmpStat stat) {
  if (k < 1 || k > n) throw std::invalid_argument("cnk_omp: need 1 <= k <= n");
  SymFn out(n, Basis::m);
  for (const auto& m : comb::enumerate_omp(n, k, n)) {
    std::vector<int> content(static_cast<std::size_t>(n), 0);
    for (const auto& b : m.blocks)
      for (int x : b) ++content[static_cast<std::size_t>(x - 1)];
    if (!std::is_sorted(content.rbegin(), content.rend())) continue;
    while (!content.empty() && content.back() == 0) content.pop_back();
    out.add(Partition(content), QZPoly::q_power(comb::omp_statistic(m, stat)));
  }
  return out;
}

SymFn osp_sign_module(int n, int k) {
  comb::OspConstraint c;
  c.k = k;
  // orbit representatives: one per block-size composition
  std::map<std::vector<int>, std::int64_t> orbit_sizes;
  for (const auto& sigma : comb::enumerate_osp(n, c)) {
    std::vector<int> alpha;
    for (const auto& b : sigma.blocks) alpha.push_back(static_cast<int>(b.size()));
    ++orbit_sizes[alpha];
  }
  SymFn out(n, Basis::e);
  for (const auto& [alpha, size] : orbit_sizes) {
    std::int64_t stab = 1;
    for (int a : alpha) stab *= comb::factorial(a);
    if (comb::factorial(n) / stab != size) throw IntegrityError("osp_sign_module: orbit size mismatch");
    std::vector<int> sorted = alpha;
    std::sort(sorted.rbegin(), sorted.rend());
    out.add(Partition(sorted), 1);
  }
  return to_basis(out, Basis::s);
}

exact::MPoly schur_poly(const Partition& nu, int nvars, const std::vector<int>& vars) {
  int N = static_cast<int>(vars.size());
  exact::MPoly out(nvars);
  if (nu.length() > N) return out;
  std::vector<std::vector<int>> t(static_cast<std::size_t>(nu.length()));
  for (int i = 0; i < nu.length(); ++i) t[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(nu.part(i)), 0);
  std::function<void(int, int)> fill = [&](int r, int c) {
    if (r == nu.length()) {
      exact::Exponent e;
      for (const auto& row : t)
        for (int v : row) e.add(vars[static_cast<std::size_t>(v - 1)], 1);
      out.add_term(e, 1);
      return;
    }
    int nr = c + 1 == nu.part(r) ? r + 1 : r;
    int nc = c + 1 == nu.part(r) ? 0 : c + 1;
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
    if (r > 0) lo = std::max(lo, t[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
    for (int v = lo; v <= N; ++v) {
      t[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      fill(nr, nc);
    }
  };
  if (nu.empty()) return exact::MPoly::constant(nvars, 1);
  fill(0, 0);
  return out;
}

exact::MPoly schur_poly_bialternant(const Partition& nu, int nvars, const std::vector<int>& vars) {
  int N = static_cast<int>(vars.size());
  if (nu.length() > N) throw std::invalid_argument("schur_poly_bialternant: too many parts");
  exact::PolyMatrix num(N, N, nvars), den(N, N, nvars);
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      exact::MPoly v = exact::MPoly::variable(nvars, vars[static_cast<std::size_t>(i)]);
      num.at(i, j) = v.pow(nu.part(j) + N - 1 - j);
      den.at(i, j) = v.pow(N - 1 - j);
    }
  }
  auto q = num.det().divide_exact(den.det());
  if (!q) throw IntegrityError("schur_poly_bialternant: alternant quotient is not a polynomial");
  return *q;
}

}  // namespace scoin::sym
