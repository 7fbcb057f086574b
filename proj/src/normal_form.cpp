#include "amalgam/normal_form.hpp"

#include <cstdlib>

namespace amalgam {

namespace {
long mod_floor(long value, long modulus) {
  long r = value % modulus;
  return r < 0 ? r + modulus : r;
}
}  // namespace

NormalWord NormalWord::generator_power(const AmalgamParams& params, Factor f,
                                       long exponent) {
  NormalWord w(params);
  w.append_power(f, exponent);
  return w;
}

NormalWord NormalWord::central_power(const AmalgamParams& params,
                                     long exponent) {
  NormalWord w(params);
  w.append_central(exponent);
  return w;
}

void NormalWord::append_central(long exponent) {
  central_ = static_cast<int>(mod_floor(central_ + exponent, params_.d));
}

void NormalWord::append_power(Factor f, long exponent) {
  const long order = params_.factor_order(f);
  long e = mod_floor(exponent, order);
  if (e == 0) return;
  if (!syllables_.empty() && syllables_.back().factor == f) {
    // Merge with the trailing syllable; the exposed stack top belongs to
    // the other factor, so the recursion bottoms out immediately.
    long merged = mod_floor(syllables_.back().exponent + e, order);
    syllables_.pop_back();
    append_power(f, merged);
    return;
  }
  // Split off the full r-powers: x^e = r^(e/width) x^(e mod width), and r
  // is central, so its powers migrate to the prefix.
  const long width = params_.coset_width(f);
  append_central(e / width);
  if (long residue = e % width) {
    syllables_.push_back({f, static_cast<int>(residue)});
  }
}

void NormalWord::append(const NormalWord& other) {
  if (!(params_ == other.params_))
    throw ParamMismatch("cannot multiply words over different parameters");
  append_central(other.central_);
  for (const Syllable& syl : other.syllables_) {
    append_power(syl.factor, syl.exponent);
  }
}

std::strong_ordering NormalWord::order(const NormalWord& other) const {
  if (auto c = central_ <=> other.central_; c != 0) return c;
  if (auto c = syllables_.size() <=> other.syllables_.size(); c != 0) return c;
  for (std::size_t i = 0; i < syllables_.size(); ++i) {
    if (auto c = syllables_[i].factor <=> other.syllables_[i].factor; c != 0)
      return c;
    if (auto c = syllables_[i].exponent <=> other.syllables_[i].exponent;
        c != 0)
      return c;
  }
  return std::strong_ordering::equal;
}

NormalWord reduce(const RawWord& word, const AmalgamParams& params) {
  NormalWord out(params);
  for (const RawLetter& letter : word.letters) {
    out.append_power(letter.generator, letter.exponent);
  }
  return out;
}

NormalWord multiply(const NormalWord& a, const NormalWord& b) {
  NormalWord out = a;
  out.append(b);
  return out;
}

NormalWord invert(const NormalWord& a) {
  NormalWord out(a.params());
  const auto& syllables = a.syllables();
  for (auto it = syllables.rbegin(); it != syllables.rend(); ++it) {
    out.append_power(it->factor, -static_cast<long>(it->exponent));
  }
  out.append_central(-static_cast<long>(a.central()));
  return out;
}

NormalWord power(const NormalWord& a, long e) {
  NormalWord base = e < 0 ? invert(a) : a;
  NormalWord out(a.params());
  for (long i = 0, reps = std::labs(e); i < reps; ++i) out.append(base);
  return out;
}

std::size_t syllable_length(const NormalWord& a) {
  return a.syllables().size();
}

std::string render(const NormalWord& word) {
  if (word.is_identity()) return "1";
  std::string out;
  auto sep = [&out]() {
    if (!out.empty()) out += " · ";
  };
  if (word.central() != 0) {
    out += "r";
    if (word.central() != 1) out += "^" + std::to_string(word.central());
  }
  for (const Syllable& syl : word.syllables()) {
    sep();
    out += generator_char(syl.factor);
    if (syl.exponent != 1) out += "^" + std::to_string(syl.exponent);
  }
  return out;
}

}  // namespace amalgam
