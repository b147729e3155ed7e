#include "semiprim/constructions.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

#include "semiprim/error.hpp"
#include "semiprim/field.hpp"
#include "semiprim/numbers.hpp"

namespace semiprim {

namespace {

constexpr std::uint64_t kMaxFamilyDegree = 100'000;
constexpr std::uint64_t kMaxExtraspecialOrder = 243;

// Normal forms x^i y^j z^k with z = [x, y] central, x^q = z^alpha and
// y^q = z^beta.
class ClassTwoGroup {
 public:
  ClassTwoGroup(std::uint32_t q, std::uint32_t alpha, std::uint32_t beta)
      : q_(q), alpha_(alpha), beta_(beta) {}

  std::size_t size() const { return std::size_t{q_} * q_ * q_; }

  std::uint32_t encode(std::uint32_t i, std::uint32_t j, std::uint32_t k) const {
    return (i * q_ + j) * q_ + k;
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t const i = a / (q_ * q_), j = a / q_ % q_, k = a % q_;
    std::uint32_t const i2 = b / (q_ * q_), j2 = b / q_ % q_, k2 = b % q_;
    // y^j x^i2 = x^i2 y^j z^(-j i2)
    std::uint64_t kk = k + k2 + alpha_ * ((i + i2) / q_) +
                       beta_ * ((j + j2) / q_) + std::uint64_t{q_} * q_ * q_ -
                       (std::uint64_t{j} * i2) % q_;
    return encode((i + i2) % q_, (j + j2) % q_,
                  static_cast<std::uint32_t>(kk % q_));
  }

  // Right multiplication by element e.
  Perm right(std::uint32_t e) const {
    std::vector<Point> img(size());
    for (std::uint32_t p = 0; p < size(); ++p) img[p] = mul(p, e);
    return Perm(std::move(img));
  }

  Perm x() const { return right(encode(1, 0, 0)); }
  Perm y() const { return right(encode(0, 1, 0)); }

  PermGroup group() const { return PermGroup(size(), {x(), y()}); }

 private:
  std::uint32_t q_, alpha_, beta_;
};

ClassTwoGroup extraspecial_law(std::uint32_t q, bool plus_type, std::uint32_t m) {
  if (!is_prime(q)) throw InvalidArgument("extraspecial group needs a prime q");
  if (m == 0) throw InvalidArgument("extraspecial group needs m >= 1");
  if (m >= 2) {
    throw CapExceeded("extraspecial groups with m >= 2 are not supported");
  }
  if (std::uint64_t{q} * q * q > kMaxExtraspecialOrder) {
    throw CapExceeded("extraspecial group of order " +
                      std::to_string(std::uint64_t{q} * q * q) +
                      " is above the limit " +
                      std::to_string(kMaxExtraspecialOrder));
  }
  if (q == 2) return plus_type ? ClassTwoGroup(2, 0, 0) : ClassTwoGroup(2, 1, 1);
  if (!plus_type) {
    throw InvalidArgument("only the plus type is supported for odd q");
  }
  return ClassTwoGroup(q, 0, 0);
}

// Shifts a permutation of one factor into a direct product.
Perm embed(Perm const& g, std::size_t before, std::size_t after) {
  Perm out = before ? direct_sum(Perm(before), g) : g;
  return after ? direct_sum(out, Perm(after)) : out;
}

GroupRecipe finish(Family family, std::string name, Json params,
                   std::uint64_t expected, PermGroup k,
                   std::vector<std::vector<Perm>> const& h_images,
                   Caps const& caps) {
  SemidirectSpec spec(std::move(k), h_images, caps);
  if (spec.group().order() != expected) {
    throw std::logic_error(name + ": realised order " +
                           std::to_string(spec.group().order()) +
                           " differs from the closed form " +
                           std::to_string(expected));
  }
  return GroupRecipe{family, std::move(name), std::move(params), expected,
                     std::move(spec), std::nullopt};
}

void check_degree(std::uint64_t degree) {
  if (degree > kMaxFamilyDegree) {
    throw CapExceeded("family degree " + std::to_string(degree) +
                      " is above the limit " + std::to_string(kMaxFamilyDegree));
  }
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::inversion: return "inversion";
    case Family::vector: return "vector";
    case Family::extraspecial: return "extraspecial";
    case Family::c3: return "c3";
    case Family::diagonal: return "diagonal";
    case Family::custom: return "custom";
  }
  return "custom";
}

GroupRecipe semidirect(std::string name, PermGroup k,
                       std::vector<std::vector<Perm>> const& h_images,
                       Caps const& caps) {
  SemidirectSpec spec(std::move(k), h_images, caps);
  std::uint64_t const order = spec.group().order();
  return GroupRecipe{Family::custom, std::move(name), Json::object(), order,
                     std::move(spec), std::nullopt};
}

PermGroup extraspecial_group(std::uint32_t q, bool plus_type, std::uint32_t m) {
  return extraspecial_law(q, plus_type, m).group();
}

std::vector<std::uint64_t> parse_p_shape(std::string_view shape) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos <= shape.size()) {
    std::size_t end = shape.find('x', pos);
    if (end == std::string_view::npos) end = shape.size();
    std::string_view tok = shape.substr(pos, end - pos);
    if (tok.size() < 2 || (tok[0] != 'c' && tok[0] != 'C')) {
      throw ParseError("bad P shape '" + std::string(shape) +
                       "': expected factors like c9xc3");
    }
    std::uint64_t v = 0;
    for (char ch : tok.substr(1)) {
      if (ch < '0' || ch > '9' || v > 1'000'000'000) {
        throw ParseError("bad cyclic order in P shape '" + std::string(shape) + "'");
      }
      v = v * 10 + static_cast<std::uint64_t>(ch - '0');
    }
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

GroupRecipe family_inversion(std::uint32_t q,
                             std::vector<std::uint64_t> const& cyclic_orders,
                             Caps const& caps) {
  if (!is_prime(q) || q == 2) {
    throw InvalidArgument("inversion family needs an odd prime q");
  }
  if (cyclic_orders.empty()) throw InvalidArgument("P must be nontrivial");
  std::uint64_t size = 1, degree = 0;
  std::string shape;
  for (auto c : cyclic_orders) {
    if (c < q || !is_power_of(c, q)) {
      throw InvalidArgument("cyclic factor " + std::to_string(c) +
                            " is not a nontrivial power of " + std::to_string(q));
    }
    size *= c;
    degree += c;
    check_degree(size);
    shape += (shape.empty() ? "c" : "xc") + std::to_string(c);
  }
  std::vector<Perm> gens;
  std::uint64_t offset = 0;
  for (auto c : cyclic_orders) {
    std::vector<Point> cycle(c);
    for (std::uint64_t i = 0; i < c; ++i) cycle[i] = static_cast<Point>(offset + i);
    gens.push_back(Perm::from_cycles(degree, {cycle}));
    offset += c;
  }
  std::vector<Perm> inverted;
  for (auto const& g : gens) inverted.push_back(g.inverse());
  Json params{{"q", q}, {"p_shape", shape}};
  return finish(Family::inversion,
                "inversion(q=" + std::to_string(q) + ",P=" + shape + ")",
                std::move(params), 2 * size, PermGroup(degree, gens),
                {inverted}, caps);
}

GroupRecipe family_vector(std::uint32_t q, std::uint32_t a, std::uint32_t n,
                          std::uint32_t m, Caps const& caps) {
  if (!is_prime(q)) throw InvalidArgument("vector family needs a prime q");
  if (a == 0 || n == 0 || m == 0) {
    throw InvalidArgument("vector family needs a, n, m >= 1");
  }
  std::uint64_t const dim = std::uint64_t{a} * n * m;
  std::uint64_t size = 1;
  for (std::uint64_t i = 0; i < dim; ++i) {
    size *= q;
    check_degree(size);
  }
  SmallField field(q, a);
  std::uint64_t const big_q = field.size();

  // coordinate (copy c, row i, digit b) of W over F_q
  auto coord = [&](std::uint32_t c, std::uint32_t i, std::uint32_t b) {
    return (std::size_t{c} * n + i) * a + b;
  };
  std::vector<Perm> gens;
  for (std::uint64_t d = 0; d < dim; ++d) {
    std::vector<Point> cycle(q);
    for (std::uint32_t i = 0; i < q; ++i) cycle[i] = static_cast<Point>(d * q + i);
    gens.push_back(Perm::from_cycles(dim * q, {cycle}));
  }

  using Matrix = std::vector<std::vector<SmallField::Elem>>;
  auto identity = [&] {
    Matrix mat(n, std::vector<SmallField::Elem>(n, 0));
    for (std::uint32_t i = 0; i < n; ++i) mat[i][i] = 1;
    return mat;
  };
  std::vector<Matrix> mats;
  if (field.primitive_power(1) != 1) {
    Matrix d = identity();
    d[0][0] = field.primitive_power(1);
    mats.push_back(d);
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (std::uint32_t b = 0; b < a; ++b) {
        Matrix t = identity();
        t[i][j] = field.basis(b);
        mats.push_back(t);
      }
    }
  }
  // column vectors: e_(c,i) * x^b maps to sum_j M[j][i] x^b e_(c,j)
  std::vector<std::vector<Perm>> h_images;
  for (auto const& mat : mats) {
    std::vector<Perm> images;
    for (std::uint32_t c = 0; c < m; ++c) {
      for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t b = 0; b < a; ++b) {
          Perm img(dim * q);
          for (std::uint32_t j = 0; j < n; ++j) {
            auto const v = field.mul(mat[j][i], field.basis(b));
            for (std::uint32_t b2 = 0; b2 < a; ++b2) {
              img *= gens[coord(c, j, b2)].pow(field.digit(v, b2));
            }
          }
          images.push_back(std::move(img));
        }
      }
    }
    h_images.push_back(std::move(images));
  }

  std::uint64_t gl = 1;
  std::uint64_t qn = 1;
  for (std::uint32_t i = 0; i < n; ++i) qn *= big_q;
  for (std::uint64_t qi = 1, i = 0; i < n; ++i, qi *= big_q) gl *= qn - qi;

  Json params{{"q", q}, {"a", a}, {"n", n}, {"m", m}};
  std::ostringstream name;
  name << "vector(q=" << q << ",a=" << a << ",n=" << n << ",m=" << m << ")";
  return finish(Family::vector, name.str(), std::move(params), size * gl,
                PermGroup(dim * q, gens), h_images, caps);
}

GroupRecipe family_extraspecial(std::uint32_t q, std::uint32_t m,
                                Caps const& caps) {
  if (q == 2) throw InvalidArgument("extraspecial family needs an odd prime q");
  ClassTwoGroup e = extraspecial_law(q, true, m);
  Perm const x = e.x(), y = e.y();
  // the transvections x -> x, y -> xy and x -> xy, y -> y generate SL_2(q)
  std::vector<std::vector<Perm>> h_images{{x, x * y}, {x * y, y}};
  std::uint64_t const e_order = std::uint64_t{q} * q * q;
  std::uint64_t const sl2 = std::uint64_t{q} * (std::uint64_t{q} * q - 1);
  Json params{{"q", q}, {"m", m}};
  return finish(Family::extraspecial,
                "extraspecial(q=" + std::to_string(q) + ",m=" + std::to_string(m) + ")",
                std::move(params), e_order * sl2, e.group(), h_images, caps);
}

GroupRecipe family_c3(std::vector<std::uint32_t> const& primes, Caps const& caps) {
  if (primes.empty()) throw InvalidArgument("c3 family needs at least one prime");
  std::vector<ClassTwoGroup> factors;
  std::uint64_t degree = 0, order = 1;
  std::string list;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    std::uint32_t const p = primes[i];
    if (!is_prime(p) || p % 3 != 2) {
      throw InvalidArgument("c3 family needs primes congruent to -1 mod 3, got " +
                            std::to_string(p));
    }
    if (i > 0 && p <= primes[i - 1]) {
      throw InvalidArgument("c3 family primes must be strictly increasing");
    }
    factors.push_back(extraspecial_law(p, p != 2, 1));
    degree += factors.back().size();
    order *= factors.back().size();
    check_degree(order);
    list += (list.empty() ? "" : ",") + std::to_string(p);
  }
  std::vector<Perm> gens, images;
  std::size_t before = 0;
  for (auto const& f : factors) {
    std::size_t const after = degree - before - f.size();
    Perm const x = f.x(), y = f.y();
    // companion matrix of x^2 + x + 1: x -> y, y -> x^-1 y^-1
    gens.push_back(embed(x, before, after));
    gens.push_back(embed(y, before, after));
    images.push_back(embed(y, before, after));
    images.push_back(embed(x.inverse() * y.inverse(), before, after));
    before += f.size();
  }
  Json params{{"primes", primes}};
  return finish(Family::c3, "c3(" + list + ")", std::move(params), 3 * order,
                PermGroup(degree, gens), {images}, caps);
}

GroupRecipe diagonal_counterexample(Caps const& caps) {
  Perm const c5 = Perm::from_cycles(5, {{0, 1, 2, 3, 4}});
  Perm const c3 = Perm::from_cycles(5, {{0, 1, 2}});
  Perm const tau = Perm::from_cycles(5, {{0, 1}});
  Perm const id5(5);

  // T1 T2 on 10 points, H = Sym(5) acting on both factors by conjugation
  PermGroup k(10, {direct_sum(c5, id5), direct_sum(c3, id5),
                   direct_sum(id5, c5), direct_sum(id5, c3)});
  std::vector<std::vector<Perm>> h_images;
  for (auto const& s : {c5, c3, tau}) {
    Perm const ss = direct_sum(s, s);
    std::vector<Perm> images;
    for (auto const& g : k.generators()) images.push_back(g.conjugate(ss));
    h_images.push_back(std::move(images));
  }
  GroupRecipe r = finish(Family::diagonal, "diagonal(A5^3:2)", Json::object(),
                         432000, k, h_images, caps);

  auto three = [](Perm const& a, Perm const& b, Perm const& c) {
    return direct_sum(direct_sum(a, b), c);
  };
  PermGroup g15(15, {three(c5, id5, id5), three(c3, id5, id5),
                     three(id5, c5, id5), three(id5, c3, id5),
                     three(id5, id5, c5), three(id5, id5, c3),
                     three(tau, tau, tau)});
  // H w with w = (w1, w2, w3) in Sym(5)^3 contains exactly one element
  // (b1, b2, 1) of T1 T2: b_i = w3^-1 w_i
  auto act = [k](Perm const& g) {
    std::size_t const n = k.order();
    std::vector<Point> img(n);
    std::vector<Point> w(15), b(10);
    for (std::size_t i = 0; i < n; ++i) {
      Perm const ki = k.element_at(i);
      for (Point p = 0; p < 10; ++p) w[p] = g[ki[p]];
      for (Point p = 10; p < 15; ++p) w[p] = g[p];
      // w3^-1 as a map on 0..4
      std::array<Point, 5> w3inv{};
      for (Point p = 0; p < 5; ++p) w3inv[w[10 + p] - 10] = p;
      for (Point p = 0; p < 5; ++p) {
        b[p] = w[w3inv[p]];
        b[5 + p] = w[5 + w3inv[p]];
      }
      img[i] = static_cast<Point>(*k.rank(Perm(b)));
    }
    return Perm(std::move(img));
  };
  ActionHom small(std::move(g15), r.spec.degree(), act);
  if (!small.image().same_elements(r.group())) {
    throw std::logic_error("diagonal example: 15-point action disagrees with the semidirect realisation");
  }
  r.small = std::move(small);
  return r;
}

}  // namespace semiprim
