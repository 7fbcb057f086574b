#include "amalgam/group_ring.hpp"

#include <stdexcept>
#include <utility>

namespace amalgam {

GroupRingElement GroupRingElement::one(const AmalgamParams& params) {
  return monomial(NormalWord(params));
}

GroupRingElement GroupRingElement::monomial(const NormalWord& word,
                                            const Rational& coeff) {
  GroupRingElement out(word.params());
  out.add_term(word, coeff);
  return out;
}

Rational GroupRingElement::coeff(const NormalWord& word) const {
  auto it = coeffs_.find(word);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void GroupRingElement::add_term(const NormalWord& word, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = coeffs_.emplace(word, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) coeffs_.erase(it);
  }
}

namespace {
void require_same_params(const GroupRingElement& a, const GroupRingElement& b) {
  if (!(a.params() == b.params()))
    throw ParamMismatch("group ring elements over different parameters");
}
}  // namespace

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& other) {
  require_same_params(*this, other);
  for (const auto& [word, coeff] : other.coeffs_) add_term(word, coeff);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& other) {
  require_same_params(*this, other);
  for (const auto& [word, coeff] : other.coeffs_) add_term(word, -coeff);
  return *this;
}

GroupRingElement& GroupRingElement::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [word, coeff] : coeffs_) coeff *= scalar;
  return *this;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement out = *this;
  for (auto& [word, coeff] : out.coeffs_) coeff = -coeff;
  return out;
}

GroupRingElement operator*(const GroupRingElement& a,
                           const GroupRingElement& b) {
  require_same_params(a, b);
  GroupRingElement out(a.params());
  for (const auto& [ga, ca] : a.coeffs()) {
    for (const auto& [gb, cb] : b.coeffs()) {
      out.add_term(multiply(ga, gb), ca * cb);
    }
  }
  return out;
}

bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
  return a.params() == b.params() && a.coeffs() == b.coeffs();
}

GroupRingElement star(const GroupRingElement& a) {
  GroupRingElement out(a.params());
  for (const auto& [word, coeff] : a.coeffs()) {
    out.add_term(invert(word), coeff);
  }
  return out;
}

Rational augmentation(const GroupRingElement& a) {
  Rational sum = 0;
  for (const auto& [word, coeff] : a.coeffs()) sum += coeff;
  return sum;
}

namespace {

// (x^from + x^(from+1) + ... + x^to) with unit coefficients.
GroupRingElement generator_range(const AmalgamParams& params, Factor f,
                                 long from, long to) {
  GroupRingElement out(params);
  for (long i = from; i <= to; ++i) {
    out.add_term(NormalWord::generator_power(params, f, i), 1);
  }
  return out;
}

GroupRingElement one_minus_inverse_gen(const AmalgamParams& params, Factor f) {
  GroupRingElement out = GroupRingElement::one(params);
  out.add_term(NormalWord::generator_power(params, f, -1), -1);
  return out;
}

void check_factorization(const GroupRingElement& solution,
                         const GroupRingElement& target, Factor f,
                         const char* name) {
  GroupRingElement factor = one_minus_inverse_gen(solution.params(), f);
  if (!(factor * solution == target) || !(solution * factor == target))
    throw std::logic_error(std::string("factorization for ") + name +
                           " does not hold");
}

}  // namespace

GroupRingElement make_p(const AmalgamParams& params) {
  GroupRingElement out = generator_range(params, Factor::s, 0, params.m - 1);
  out *= make_rational(1, params.m);
  return out;
}

GroupRingElement make_q(const AmalgamParams& params) {
  GroupRingElement out = generator_range(params, Factor::t, 0, params.n - 1);
  out *= make_rational(1, params.n);
  return out;
}

GroupRingElement make_h(const AmalgamParams& params) {
  GroupRingElement out(params);
  for (int i = 0; i < params.d; ++i) {
    out.add_term(NormalWord::central_power(params, i), 1);
  }
  out *= make_rational(1, params.d);
  return out;
}

GroupRingElement make_f(const AmalgamParams& params) {
  return generator_range(params, Factor::s, 0, params.coset_width(Factor::s) - 1);
}

GroupRingElement make_g(const AmalgamParams& params) {
  return generator_range(params, Factor::t, 0, params.coset_width(Factor::t) - 1);
}

namespace {

// Solves (1 - x^{-1}) K = K (1 - x^{-1}) = target for targets of the form
// (1/c) * sum_i (1 - x^{j_i}), using 1 - x^j = (1-x^{-1})(-(x + ... + x^j)).
GroupRingElement telescope_solution(const AmalgamParams& params, Factor f,
                                    const std::vector<long>& powers, long c) {
  GroupRingElement out(params);
  for (long j : powers) {
    out -= generator_range(params, f, 1, j);
  }
  out *= make_rational(1, c);
  return out;
}

}  // namespace

GroupRingElement make_k(const AmalgamParams& params) {
  if (params.d == 1) return GroupRingElement::zero(params);
  std::vector<long> powers;
  const long width = params.coset_width(Factor::s);
  for (int i = 1; i < params.d; ++i) powers.push_back(width * i);
  GroupRingElement k = telescope_solution(params, Factor::s, powers, params.d);
  check_factorization(k, GroupRingElement::one(params) - make_h(params),
                      Factor::s, "k");
  return k;
}

GroupRingElement make_l(const AmalgamParams& params) {
  if (params.d == 1) return GroupRingElement::zero(params);
  std::vector<long> powers;
  const long width = params.coset_width(Factor::t);
  for (int i = 1; i < params.d; ++i) powers.push_back(width * i);
  GroupRingElement l = telescope_solution(params, Factor::t, powers, params.d);
  check_factorization(l, GroupRingElement::one(params) - make_h(params),
                      Factor::t, "l");
  return l;
}

GroupRingElement make_k1(const AmalgamParams& params) {
  std::vector<long> powers;
  for (int i = 1; i < params.m; ++i) powers.push_back(i);
  GroupRingElement k1 = telescope_solution(params, Factor::s, powers, params.m);
  check_factorization(k1, GroupRingElement::one(params) - make_p(params),
                      Factor::s, "k1");
  return k1;
}

GroupRingElement make_l1(const AmalgamParams& params) {
  std::vector<long> powers;
  for (int i = 1; i < params.n; ++i) powers.push_back(i);
  GroupRingElement l1 = telescope_solution(params, Factor::t, powers, params.n);
  check_factorization(l1, GroupRingElement::one(params) - make_q(params),
                      Factor::t, "l1");
  return l1;
}

std::string render(const GroupRingElement& a) {
  if (a.is_zero()) return "0";
  // Deterministic: terms ordered by canonical word text.
  std::map<std::string, Rational> terms;
  for (const auto& [word, coeff] : a.coeffs()) terms.emplace(render(word), coeff);
  std::string out;
  for (const auto& [text, coeff] : terms) {
    Rational magnitude = abs(coeff);
    if (out.empty()) {
      if (coeff < 0) out += "-";
    } else {
      out += coeff < 0 ? " - " : " + ";
    }
    if (magnitude != 1 || text == "1") {
      out += to_fraction_string(magnitude);
      if (text != "1") out += " ";
    }
    if (text != "1") out += text;
  }
  return out;
}

nlohmann::ordered_json to_json(const GroupRingElement& a) {
  std::map<std::string, Rational> terms;
  for (const auto& [word, coeff] : a.coeffs()) terms.emplace(render(word), coeff);
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& [text, coeff] : terms) {
    if (!coeff.get_num().fits_slong_p() || !coeff.get_den().fits_slong_p())
      throw std::logic_error("coefficient exceeds JSON integer range");
    nlohmann::ordered_json term;
    term["word"] = text;
    term["num"] = static_cast<std::int64_t>(coeff.get_num().get_si());
    term["den"] = static_cast<std::int64_t>(coeff.get_den().get_si());
    out.push_back(term);
  }
  return out;
}

GroupRingElement group_ring_from_json(const nlohmann::json& doc,
                                      const AmalgamParams& params) {
  if (!doc.is_array())
    throw std::invalid_argument("group ring element JSON must be an array");
  GroupRingElement out(params);
  for (const auto& term : doc) {
    const std::string text = term.at("word").get<std::string>();
    const long num = term.at("num").get<long>();
    const long den = term.at("den").get<long>();
    if (den <= 0) throw std::invalid_argument("denominator must be positive");
    out.add_term(reduce(parse_word(text, params), params),
                 make_rational(num, den));
  }
  return out;
}

GRMatrix::GRMatrix(const AmalgamParams& params, std::size_t rows,
                   std::size_t cols)
    : params_(params),
      rows_(rows),
      cols_(cols),
      entries_(rows * cols, GroupRingElement(params)) {}

GRMatrix GRMatrix::identity(const AmalgamParams& params, std::size_t n) {
  GRMatrix out(params, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    out.at(i, i) = GroupRingElement::one(params);
  }
  return out;
}

GroupRingElement& GRMatrix::at(std::size_t i, std::size_t j) {
  return entries_[i * cols_ + j];
}

const GroupRingElement& GRMatrix::at(std::size_t i, std::size_t j) const {
  return entries_[i * cols_ + j];
}

GRMatrix GRMatrix::transpose() const {
  GRMatrix out(params_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      out.at(j, i) = at(i, j);
    }
  }
  return out;
}

GRMatrix GRMatrix::star_transpose() const {
  GRMatrix out(params_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      out.at(j, i) = star(at(i, j));
    }
  }
  return out;
}

namespace {
void require_same_shape(const GRMatrix& a, const GRMatrix& b) {
  if (!(a.params() == b.params()))
    throw ParamMismatch("matrices over different parameters");
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix shape mismatch");
}
}  // namespace

GRMatrix operator+(const GRMatrix& a, const GRMatrix& b) {
  require_same_shape(a, b);
  GRMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) += b.at(i, j);
  return out;
}

GRMatrix operator-(const GRMatrix& a, const GRMatrix& b) {
  require_same_shape(a, b);
  GRMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) -= b.at(i, j);
  return out;
}

GRMatrix operator*(const GRMatrix& a, const GRMatrix& b) {
  if (!(a.params() == b.params()))
    throw ParamMismatch("matrices over different parameters");
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix shape mismatch in product");
  GRMatrix out(a.params(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  }
  return out;
}

bool operator==(const GRMatrix& a, const GRMatrix& b) {
  if (!(a.params() == b.params()) || a.rows() != b.rows() ||
      a.cols() != b.cols())
    return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!(a.at(i, j) == b.at(i, j))) return false;
  return true;
}

}  // namespace amalgam
