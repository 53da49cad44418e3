#include "lerchz/characters.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "lerchz/arith.hpp"
#include "lerchz/errors.hpp"

namespace lerchz {

namespace {

std::int64_t primitive_root(std::int64_t p, int k) {
  const std::int64_t pk = ipow(p, k);
  const std::int64_t phi = pk / p * (p - 1);
  const auto factors = factorize(phi);
  for (std::int64_t g = 2; g < pk; ++g) {
    if (g % p == 0) continue;
    bool ok = true;
    for (const auto& f : factors) {
      if (pow_mod(g, phi / f.p, pk) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw InternalError("no primitive root found");
}

// Residue congruent to g mod pk and to 1 mod q / pk.
std::int64_t crt_lift(std::int64_t g, std::int64_t pk, std::int64_t q) {
  const std::int64_t rest = q / pk;
  for (std::int64_t x = mod(g, pk); x < q; x += pk)
    if (mod(x, rest) == 1 % rest) return x;
  throw InternalError("CRT lift failed");
}

}  // namespace

// ---------------------------------------------------------------------------
// UnitGroup

UnitGroup::UnitGroup(std::int64_t q) : q_(q) {
  if (q < 1) throw DomainError("unit group modulus must be positive");
  for (const auto& [p, k] : factorize(q)) {
    const std::int64_t pk = ipow(p, k);
    if (p == 2) {
      if (k >= 2) {
        generators_.push_back(crt_lift(pk - 1, pk, q));
        orders_.push_back(2);
      }
      if (k >= 3) {
        generators_.push_back(crt_lift(5, pk, q));
        orders_.push_back(pk / 4);
      }
    } else {
      generators_.push_back(crt_lift(primitive_root(p, k), pk, q));
      orders_.push_back(pk / p * (p - 1));
    }
  }
  for (auto o : orders_) {
    order_ *= o;
    exponent_ = lcm(exponent_, o);
  }

  const std::size_t r = rank();
  table_.assign(static_cast<std::size_t>(q) * std::max<std::size_t>(r, 1), -1);
  std::vector<std::int64_t> e(r, 0);
  std::int64_t cur = 1 % q;
  for (std::int64_t step = 0; step < order_; ++step) {
    if (r == 0) {
      table_[static_cast<std::size_t>(cur)] = 0;
    } else {
      for (std::size_t i = 0; i < r; ++i) table_[static_cast<std::size_t>(cur) * r + i] = static_cast<std::int32_t>(e[i]);
    }
    // Mixed-radix increment, last generator fastest; multiplying by g once
    // more wraps its exponent back to zero.
    for (std::size_t i = r; i-- > 0;) {
      cur = mul_mod(cur, generators_[i], q);
      if (++e[i] < orders_[i]) break;
      e[i] = 0;
    }
  }
}

bool UnitGroup::is_unit(std::int64_t n) const {
  return table_[static_cast<std::size_t>(mod(n, q_)) * std::max<std::size_t>(rank(), 1)] >= 0;
}

std::vector<std::int64_t> UnitGroup::dlog(std::int64_t n) const {
  if (!is_unit(n)) throw DomainError("dlog of a non-unit");
  const std::size_t r = rank();
  std::vector<std::int64_t> out(r);
  const std::size_t row = static_cast<std::size_t>(mod(n, q_)) * r;
  for (std::size_t i = 0; i < r; ++i) out[i] = table_[row + i];
  return out;
}

std::int64_t UnitGroup::dlog_component(std::int64_t n, std::size_t i) const {
  return table_[static_cast<std::size_t>(mod(n, q_)) * rank() + i];
}

std::int64_t UnitGroup::from_exponents(const std::vector<std::int64_t>& e) const {
  std::int64_t x = 1 % q_;
  for (std::size_t i = 0; i < rank(); ++i)
    x = mul_mod(x, pow_mod(generators_[i], mod(e[i], orders_[i]), q_), q_);
  return x;
}

std::vector<std::int64_t> UnitGroup::units() const {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(order_));
  for (std::int64_t n = 0; n < q_; ++n)
    if (is_unit(n)) out.push_back(n);
  return out;
}

std::shared_ptr<const UnitGroup> unit_group(std::int64_t q) {
  static std::mutex mutex;
  static std::map<std::int64_t, std::shared_ptr<const UnitGroup>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[q];
  if (!slot) slot = std::make_shared<const UnitGroup>(q);
  return slot;
}

// ---------------------------------------------------------------------------
// DirichletCharacter

DirichletCharacter::DirichletCharacter(std::shared_ptr<const UnitGroup> group, std::vector<std::int64_t> exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)) {
  if (exponents_.size() != group_->rank()) throw DomainError("exponent vector has the wrong length");
  for (std::size_t i = 0; i < exponents_.size(); ++i) exponents_[i] = mod(exponents_[i], group_->orders()[i]);
}

DirichletCharacter DirichletCharacter::trivial(std::int64_t q) {
  auto g = unit_group(q);
  const std::size_t r = g->rank();
  return DirichletCharacter(std::move(g), std::vector<std::int64_t>(r, 0));
}

DirichletCharacter DirichletCharacter::quadratic(std::int64_t q) {
  for (const auto& chi : enumerate_characters(q, true))
    if (chi.order() == 2) return chi;
  throw DomainError("no primitive quadratic character mod " + std::to_string(q));
}

DirichletCharacter DirichletCharacter::from_index(std::int64_t q, std::int64_t index) {
  auto g = unit_group(q);
  if (index < 0 || index >= g->order()) throw DomainError("character index out of range");
  std::vector<std::int64_t> e(g->rank());
  for (std::size_t i = g->rank(); i-- > 0;) {
    e[i] = index % g->orders()[i];
    index /= g->orders()[i];
  }
  return DirichletCharacter(std::move(g), std::move(e));
}

std::int64_t DirichletCharacter::index() const {
  std::int64_t idx = 0;
  for (std::size_t i = 0; i < exponents_.size(); ++i) idx = idx * group_->orders()[i] + exponents_[i];
  return idx;
}

std::int64_t DirichletCharacter::angle_numerator(std::int64_t n) const {
  const auto& g = *group_;
  if (!g.is_unit(n)) return -1;
  const std::int64_t E = g.exponent();
  std::int64_t k = 0;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    k = (k + exponents_[i] * g.dlog_component(n, i) % E * (E / g.orders()[i])) % E;
  }
  return k;
}

std::optional<Rational> DirichletCharacter::angle(std::int64_t n) const {
  const std::int64_t k = angle_numerator(n);
  if (k < 0) return std::nullopt;
  return Rational(k, group_->exponent());
}

Complex DirichletCharacter::value(std::int64_t n) const {
  const auto a = angle(n);
  if (!a) return Complex();
  return unit_root(*a);
}

std::vector<Complex> DirichletCharacter::values() const {
  const std::int64_t q = modulus();
  const std::int64_t E = group_->exponent();
  std::vector<std::optional<Complex>> roots(static_cast<std::size_t>(E));
  std::vector<Complex> out(static_cast<std::size_t>(q));
  for (std::int64_t n = 0; n < q; ++n) {
    const std::int64_t k = angle_numerator(n);
    if (k < 0) continue;
    auto& r = roots[static_cast<std::size_t>(k)];
    if (!r) r = unit_root(Rational(k, E));
    out[static_cast<std::size_t>(n)] = *r;
  }
  return out;
}

bool DirichletCharacter::is_principal() const {
  for (auto e : exponents_)
    if (e != 0) return false;
  return true;
}

bool DirichletCharacter::is_even() const { return angle_numerator(modulus() - 1) == 0; }

std::int64_t DirichletCharacter::order() const {
  std::int64_t out = 1;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    const std::int64_t o = group_->orders()[i];
    out = lcm(out, o / gcd(exponents_[i], o));
  }
  return out;
}

DirichletCharacter DirichletCharacter::conj() const {
  std::vector<std::int64_t> e(exponents_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = -exponents_[i];
  return DirichletCharacter(group_, std::move(e));
}

namespace {

// Builds the character mod `target` whose value at each generator g' equals
// source(n) for a representative n of g' that is a unit mod the source modulus.
DirichletCharacter transport(const DirichletCharacter& source, std::int64_t target) {
  auto g = unit_group(target);
  const std::int64_t E = source.group().exponent();
  const std::int64_t q = source.modulus();
  std::vector<std::int64_t> e(g->rank());
  for (std::size_t i = 0; i < g->rank(); ++i) {
    std::int64_t n = g->generators()[i];
    while (!source.group().is_unit(n)) {
      n += target;
      if (n > target * (q + 1)) throw InternalError("no unit representative found");
    }
    const std::int64_t k = source.angle_numerator(n);
    const std::int64_t num = k * g->orders()[i];
    if (num % E != 0) throw DomainError("character does not factor through the requested modulus");
    e[i] = num / E;
  }
  return DirichletCharacter(std::move(g), std::move(e));
}

}  // namespace

DirichletCharacter DirichletCharacter::lift(std::int64_t multiple) const {
  if (multiple % modulus() != 0) throw DomainError("lift target must be a multiple of the modulus");
  if (multiple == modulus()) return *this;
  return transport(*this, multiple);
}

DirichletCharacter DirichletCharacter::restrict_to(std::int64_t d) const {
  if (d < 1 || modulus() % d != 0) throw DomainError("restriction target must divide the modulus");
  if (d == modulus()) return *this;
  if (d % conductor() != 0) throw DomainError("character is not induced from modulus " + std::to_string(d));
  return transport(*this, d);
}

std::int64_t DirichletCharacter::conductor() const {
  const std::int64_t q = modulus();
  if (is_principal()) return 1;
  for (std::int64_t d : divisors(q)) {
    if (d == q) return q;
    bool trivial_on_kernel = true;
    for (std::int64_t n = 1 + d; n < q && trivial_on_kernel; n += d)
      if (group_->is_unit(n) && angle_numerator(n) != 0) trivial_on_kernel = false;
    if (trivial_on_kernel) return d;
  }
  return q;
}

DirichletCharacter DirichletCharacter::primitive() const {
  const std::int64_t d = conductor();
  if (d == modulus()) return *this;
  return transport(*this, d);
}

std::string DirichletCharacter::describe() const {
  std::ostringstream out;
  out << modulus() << ":[";
  for (std::size_t i = 0; i < exponents_.size(); ++i) out << (i ? "," : "") << exponents_[i];
  out << "]";
  return out.str();
}

DirichletCharacter operator*(const DirichletCharacter& a, const DirichletCharacter& b) {
  if (a.modulus() != b.modulus()) {
    const std::int64_t m = lcm(a.modulus(), b.modulus());
    return a.lift(m) * b.lift(m);
  }
  std::vector<std::int64_t> e(a.exponents().size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = a.exponents()[i] + b.exponents()[i];
  return DirichletCharacter(a.group_ptr(), std::move(e));
}

std::vector<DirichletCharacter> enumerate_characters(std::int64_t q, bool primitive_only) {
  auto g = unit_group(q);
  std::vector<DirichletCharacter> out;
  out.reserve(static_cast<std::size_t>(g->order()));
  for (std::int64_t i = 0; i < g->order(); ++i) {
    auto chi = DirichletCharacter::from_index(q, i);
    if (!primitive_only || chi.is_primitive()) out.push_back(std::move(chi));
  }
  return out;
}

DirichletCharacter parse_character(std::int64_t q, const std::string& text) {
  if (q < 1) throw ParseError("modulus must be positive");
  if (text == "trivial" || text == "principal") return DirichletCharacter::trivial(q);
  try {
    if (text == "quadratic") return DirichletCharacter::quadratic(q);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  auto g = unit_group(q);
  std::string body = text;
  if (!body.empty() && body.front() == '[' && body.back() == ']') body = body.substr(1, body.size() - 2);
  std::vector<std::int64_t> parts;
  std::stringstream in(body);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stoll(item, &used));
      if (used != item.size()) throw ParseError("invalid character descriptor '" + text + "'");
    } catch (const std::logic_error&) {
      throw ParseError("invalid character descriptor '" + text + "'");
    }
  }
  if (parts.empty()) throw ParseError("empty character descriptor");
  const bool vector_form = text.find(',') != std::string::npos || text.front() == '[';
  if (!vector_form) {
    if (parts[0] < 0 || parts[0] >= g->order())
      throw ParseError("character index " + text + " out of range for modulus " + std::to_string(q));
    return DirichletCharacter::from_index(q, parts[0]);
  }
  if (parts.size() != g->rank())
    throw ParseError("character mod " + std::to_string(q) + " needs " + std::to_string(g->rank()) + " exponents");
  return DirichletCharacter(std::move(g), std::move(parts));
}

ComplexApprox gauss_sum(const DirichletCharacter& chi) {
  const std::int64_t q = chi.modulus();
  const std::int64_t E = chi.group().exponent();
  Complex sum;
  for (std::int64_t a = 0; a < q; ++a) {
    const std::int64_t k = chi.angle_numerator(a);
    if (k < 0) continue;
    sum += unit_root(Rational(k, E) + Rational(a, q));
  }
  const double phi = static_cast<double>(chi.group().order());
  return ComplexApprox(std::move(sum), round_up(phi * (phi + 8) * unit_roundoff()));
}

ComplexApprox nu_weight(const DirichletCharacter& chi_star, const DirichletCharacter& psi, const Complex& s,
                        std::int64_t t) {
  if (t < 1) throw DomainError("nu weight needs a positive integer t");
  const Complex one_minus_s = Complex(Real(1)) - s;
  Complex sum;
  double magnitude = 0;
  int terms = 0;
  for (std::int64_t d : divisors(t)) {
    const int mu = mobius(t / d);
    if (mu == 0) continue;
    const auto a = psi.angle(d);
    const auto b = chi_star.angle(t / d);
    if (!a || !b) continue;
    Complex term = pow(Real(d), one_minus_s) * unit_root(*a + *b);
    if (mu < 0) term = -term;
    magnitude += upper(term);
    sum += term;
    ++terms;
  }
  return ComplexApprox(std::move(sum), round_up(magnitude * (terms + 16) * unit_roundoff()));
}

std::vector<ComplexApprox> character_transform(std::int64_t q, const std::vector<ComplexApprox>& f) {
  const auto chars = enumerate_characters(q);
  const auto units = unit_group(q)->units();
  if (f.size() != units.size()) throw DomainError("function must be given on all units");
  const double phi = static_cast<double>(units.size());
  double err = 0, mag = 0;
  for (const auto& x : f) {
    err += x.err;
    mag += x.magnitude_upper();
  }
  const double bound = round_up((err + mag * (phi + 16) * unit_roundoff()) / phi);
  std::vector<ComplexApprox> out;
  out.reserve(chars.size());
  for (const auto& chi : chars) {
    const auto vals = chi.values();
    Complex sum;
    for (std::size_t i = 0; i < units.size(); ++i) sum += f[i].value * lerchz::conj(vals[units[i]]);
    out.emplace_back(sum / Real(phi), bound);
  }
  return out;
}

std::vector<ComplexApprox> inverse_character_transform(std::int64_t q, const std::vector<ComplexApprox>& fhat) {
  const auto chars = enumerate_characters(q);
  const auto units = unit_group(q)->units();
  if (fhat.size() != chars.size()) throw DomainError("transform must be given on all characters");
  double err = 0, mag = 0;
  for (const auto& x : fhat) {
    err += x.err;
    mag += x.magnitude_upper();
  }
  const double bound = round_up(err + mag * (static_cast<double>(chars.size()) + 16) * unit_roundoff());
  std::vector<Complex> sums(units.size());
  for (std::size_t c = 0; c < chars.size(); ++c) {
    const auto vals = chars[c].values();
    for (std::size_t i = 0; i < units.size(); ++i) sums[i] += fhat[c].value * vals[units[i]];
  }
  std::vector<ComplexApprox> out;
  out.reserve(units.size());
  for (auto& v : sums) out.emplace_back(std::move(v), bound);
  return out;
}

}  // namespace lerchz
