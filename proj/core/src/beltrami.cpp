#include "teich/beltrami.hpp"

#include <sstream>

#include "teich/error.hpp"

namespace teich {
namespace {

cplx ipow(cplx z, int n) {
  cplx result{1.0, 0.0};
  cplx base = z;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_interior(cplx z) {
  if (!(std::norm(z) < 1.0)) {
    throw Error(ErrorCode::kOutsideDomain, "|z| >= 1 for z = (" + std::to_string(z.real()) +
                                               ", " + std::to_string(z.imag()) + ")");
  }
}

cplx sampled_value(const mu::Sampled& s, int ir, int it) {
  return s.values[static_cast<std::size_t>(ir) * s.grid.ntheta() + it];
}

}  // namespace

cplx QuadraticDifferential::operator()(cplx z) const {
  cplx acc{};
  for (auto it = h.rbegin(); it != h.rend(); ++it) acc = acc * z + *it;
  return acc;
}

int QuadraticDifferential::degree() const {
  for (int m = static_cast<int>(h.size()) - 1; m >= 0; --m) {
    if (h[static_cast<std::size_t>(m)] != cplx{}) return m;
  }
  return -1;
}

BeltramiSpec::BeltramiSpec(Variant v) : v_(std::move(v)) {
  if (const auto* e = std::get_if<mu::ExampleFamily>(&v_); e && e->n < 3) {
    throw Error(ErrorCode::kOutOfRange, "example family requires n >= 3");
  }
  if (const auto* m = std::get_if<mu::Monomial>(&v_); m && (m->p < 0 || m->q < 0)) {
    throw Error(ErrorCode::kOutOfRange, "monomial exponents must be >= 0");
  }
  if (const auto* s = std::get_if<mu::Sampled>(&v_); s && s->values.size() != s->grid.size()) {
    throw Error(ErrorCode::kGridShape, "sampled values do not match the grid size");
  }
}

BeltramiSpec BeltramiSpec::harmonic(QuadraticDifferential phi) {
  return BeltramiSpec(mu::Harmonic{std::move(phi)});
}
BeltramiSpec BeltramiSpec::example_family(int n) { return BeltramiSpec(mu::ExampleFamily{n}); }
BeltramiSpec BeltramiSpec::monomial(cplx c, int p, int q) {
  return BeltramiSpec(mu::Monomial{c, p, q});
}
BeltramiSpec BeltramiSpec::sampled(const PolarGrid& grid, std::vector<cplx> values) {
  return BeltramiSpec(mu::Sampled{grid, std::move(values)});
}

cplx BeltramiSpec::operator()(cplx z) const {
  require_interior(z);
  if (const auto* s = std::get_if<mu::Sampled>(&v_)) {
    const auto [ir, it] = s->grid.locate(z);
    if (ir < 0) {
      throw Error(ErrorCode::kNoInterpolation, "sampled Beltrami coefficient evaluated off its grid");
    }
    return sampled_value(*s, ir, it);
  }
  if (const auto* c = std::get_if<mu::Combination>(&v_)) {
    cplx acc{};
    for (const auto& [w, spec] : c->terms) acc += w * (*spec)(z);
    return acc;
  }
  return *closed_form(z);
}

std::optional<cplx> BeltramiSpec::closed_form(cplx z) const {
  return std::visit(
      overloaded{
          [](const mu::Zero&) -> std::optional<cplx> { return cplx{}; },
          [z](const mu::Harmonic& h) -> std::optional<cplx> {
            const double s = 1.0 - std::norm(z);
            return std::conj(h.phi(z)) * (s * s);
          },
          [z](const mu::ExampleFamily& e) -> std::optional<cplx> {
            return -static_cast<double>(e.n) * z * z * ipow(std::conj(z), e.n - 1);
          },
          [z](const mu::Monomial& m) -> std::optional<cplx> {
            return m.c * ipow(z, m.p) * ipow(std::conj(z), m.q);
          },
          [](const mu::Sampled&) -> std::optional<cplx> { return std::nullopt; },
          [z](const mu::Combination& c) -> std::optional<cplx> {
            cplx acc{};
            for (const auto& [w, spec] : c.terms) {
              const auto v = spec->closed_form(z);
              if (!v) return std::nullopt;
              acc += w * *v;
            }
            return acc;
          },
      },
      v_);
}

cplx BeltramiSpec::at(const DiscNode& node) const {
  if (const auto* s = std::get_if<mu::Sampled>(&v_)) {
    if (node.ir < 0 || node.ir >= s->grid.nr() || node.itheta < 0 ||
        node.itheta >= s->grid.ntheta() || std::abs(s->grid.node(node.ir, node.itheta).z - node.z) > 1e-12) {
      return (*this)(node.z);
    }
    return sampled_value(*s, node.ir, node.itheta);
  }
  if (const auto* c = std::get_if<mu::Combination>(&v_)) {
    cplx acc{};
    for (const auto& [w, spec] : c->terms) acc += w * spec->at(node);
    return acc;
  }
  return (*this)(node.z);
}

std::string BeltramiSpec::label() const {
  std::ostringstream os;
  os.precision(17);
  std::visit(overloaded{
                 [&](const mu::Zero&) { os << "zero"; },
                 [&](const mu::Harmonic& h) {
                   os << "harmonic(h=[";
                   for (std::size_t m = 0; m < h.phi.h.size(); ++m) {
                     os << (m ? ", " : "") << h.phi.h[m].real() << (h.phi.h[m].imag() < 0 ? "" : "+")
                        << h.phi.h[m].imag() << "i";
                   }
                   os << "])";
                 },
                 [&](const mu::ExampleFamily& e) { os << "example(n=" << e.n << ")"; },
                 [&](const mu::Monomial& m) {
                   os << "monomial(c=" << m.c.real() << (m.c.imag() < 0 ? "" : "+") << m.c.imag()
                      << "i, p=" << m.p << ", q=" << m.q << ")";
                 },
                 [&](const mu::Sampled& s) {
                   os << "sampled(nr=" << s.grid.nr() << ", ntheta=" << s.grid.ntheta() << ")";
                 },
                 [&](const mu::Combination& c) {
                   os << "combination(";
                   for (std::size_t i = 0; i < c.terms.size(); ++i) {
                     os << (i ? " + " : "") << "(" << c.terms[i].first.real() << ","
                        << c.terms[i].first.imag() << ")*" << c.terms[i].second->label();
                   }
                   os << ")";
                 },
             },
             v_);
  return os.str();
}

cplx evaluate_mu(const BeltramiSpec& spec, cplx z) { return spec(z); }

cplx reflect_mu(const BeltramiSpec& spec, cplx w) {
  if (!(std::norm(w) > 1.0)) {
    throw Error(ErrorCode::kOutsideDomain, "reflection is defined on |w| > 1");
  }
  const cplx z = 1.0 / std::conj(w);
  const cplx zb = std::conj(z);
  return std::conj(spec(z)) * (z * z) / (zb * zb);
}

BeltramiSpec scale(const BeltramiSpec& spec, cplx c) {
  return std::visit(
      overloaded{
          [](const mu::Zero&) { return BeltramiSpec::zero(); },
          [c](const mu::Harmonic& h) {
            // c·conj(φ) = conj(conj(c)·φ)
            QuadraticDifferential phi = h.phi;
            for (auto& hm : phi.h) hm *= std::conj(c);
            return BeltramiSpec::harmonic(std::move(phi));
          },
          [c](const mu::ExampleFamily& e) {
            return BeltramiSpec::monomial(-static_cast<double>(e.n) * c, 2, e.n - 1);
          },
          [c](const mu::Monomial& m) { return BeltramiSpec::monomial(c * m.c, m.p, m.q); },
          [c](const mu::Sampled& s) {
            std::vector<cplx> values = s.values;
            for (auto& v : values) v *= c;
            return BeltramiSpec::sampled(s.grid, std::move(values));
          },
          [c](const mu::Combination& comb) {
            mu::Combination out = comb;
            for (auto& term : out.terms) term.first *= c;
            return BeltramiSpec(std::move(out));
          },
      },
      spec.variant());
}

BeltramiSpec combine(cplx alpha, const BeltramiSpec& mu1, cplx beta, const BeltramiSpec& mu2) {
  mu::Combination c;
  c.terms.emplace_back(alpha, std::make_shared<const BeltramiSpec>(mu1));
  c.terms.emplace_back(beta, std::make_shared<const BeltramiSpec>(mu2));
  return BeltramiSpec(std::move(c));
}

}  // namespace teich
