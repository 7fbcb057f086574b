#include "amalgam/fox.hpp"

#include <cstdlib>

namespace amalgam {

FreeWord FreeWord::power(Factor gen, long exponent) {
  FreeWord out;
  int sign = exponent < 0 ? -1 : 1;
  for (long i = 0, reps = std::labs(exponent); i < reps; ++i) {
    out.push(gen, sign);
  }
  return out;
}

void FreeWord::push(Factor gen, int sign) {
  if (!letters_.empty() && letters_.back().gen == gen &&
      letters_.back().sign == -sign) {
    letters_.pop_back();
    return;
  }
  letters_.push_back({gen, sign});
}

FreeWord FreeWord::inverse() const {
  FreeWord out;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    out.push(it->gen, -it->sign);
  }
  return out;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  FreeWord out = a;
  for (const FreeLetter& letter : b.letters()) {
    out.push(letter.gen, letter.sign);
  }
  return out;
}

FreeWord relator_s(const AmalgamParams& params) {
  return FreeWord::power(Factor::s, params.m);
}

FreeWord relator_t(const AmalgamParams& params) {
  return FreeWord::power(Factor::t, params.n);
}

FreeWord relator_amalgam(const AmalgamParams& params) {
  return FreeWord::power(Factor::s, -params.coset_width(Factor::s)) *
         FreeWord::power(Factor::t, params.coset_width(Factor::t));
}

GroupRingElement fox_derivative(const FreeWord& word, Factor gen,
                                const AmalgamParams& params) {
  // Letter by letter via the product rule: a positive occurrence of gen at
  // prefix u contributes u, a negative one contributes -u·gen^{-1}.
  GroupRingElement out(params);
  NormalWord prefix(params);
  for (const FreeLetter& letter : word.letters()) {
    if (letter.gen == gen) {
      if (letter.sign > 0) {
        out.add_term(prefix, 1);
      } else {
        NormalWord shifted = prefix;
        shifted.append_power(gen, -1);
        out.add_term(shifted, -1);
      }
    }
    prefix.append_power(letter.gen, letter.sign);
  }
  return out;
}

GRMatrix build_delta0(const AmalgamParams& params) {
  GRMatrix out(params, 1, 2);
  GroupRingElement one = GroupRingElement::one(params);
  out.at(0, 0) = one - GroupRingElement::monomial(
                           NormalWord::generator_power(params, Factor::s, 1));
  out.at(0, 1) = one - GroupRingElement::monomial(
                           NormalWord::generator_power(params, Factor::t, 1));
  return out;
}

GRMatrix build_d0(const AmalgamParams& params) {
  return build_delta0(params).transpose();
}

GRMatrix build_delta1(const AmalgamParams& params) {
  const FreeWord relators[3] = {relator_s(params), relator_t(params),
                                relator_amalgam(params)};
  GRMatrix out(params, 2, 3);
  for (int j = 0; j < 3; ++j) {
    out.at(0, j) = fox_derivative(relators[j], Factor::s, params);
    out.at(1, j) = fox_derivative(relators[j], Factor::t, params);
  }
  // Drop the invertible central unit s^{-m/d} from the third relator's
  // derivatives by multiplying that column with r = s^{m/d}.
  GroupRingElement unit = GroupRingElement::monomial(
      NormalWord::central_power(params, 1));
  out.at(0, 2) = unit * out.at(0, 2);
  out.at(1, 2) = unit * out.at(1, 2);
  return out;
}

GRMatrix build_d1(const AmalgamParams& params) {
  return build_delta1(params).transpose();
}

GRMatrix build_laplacian(const AmalgamParams& params) {
  GRMatrix d0 = build_d0(params);
  GRMatrix d1 = build_d1(params);
  return d0 * d0.star_transpose() + d1.star_transpose() * d1;
}

GRMatrix expanded_laplacian(const AmalgamParams& params) {
  GroupRingElement one = GroupRingElement::one(params);
  GroupRingElement s = GroupRingElement::monomial(
      NormalWord::generator_power(params, Factor::s, 1));
  GroupRingElement t = GroupRingElement::monomial(
      NormalWord::generator_power(params, Factor::t, 1));
  GroupRingElement f = make_f(params);
  GroupRingElement g = make_g(params);

  // Rank-one block (1-s, 1-t)(1-s, 1-t)*.
  GRMatrix edge(params, 2, 1);
  edge.at(0, 0) = one - s;
  edge.at(1, 0) = one - t;
  GRMatrix term1 = edge * edge.star_transpose();

  GRMatrix term2(params, 2, 2);
  term2.at(0, 0) = Rational(params.m * params.m) * make_p(params);
  term2.at(1, 1) = Rational(params.n * params.n) * make_q(params);

  // Rank-one block (-f(s), g(t))* (-f(s), g(t)).
  GRMatrix mixed(params, 1, 2);
  mixed.at(0, 0) = -f;
  mixed.at(0, 1) = g;
  GRMatrix term3 = mixed.star_transpose() * mixed;

  return term1 + term2 + term3;
}

}  // namespace amalgam
