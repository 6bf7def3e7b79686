#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gaugekit {

/// Sign of the potential term in the covariant derivative:
/// minus gives D_mu = d_mu - i eps B_mu, plus gives D_mu = d_mu + i eps B_mu.
enum class SignConvention { Minus, Plus };

/// Which side S acts on in the gauge transformation:
/// Ym  : B' = Sinv B S + i Sinv (dS) / eps, paired with psi = S psi'.
/// Author: B' = S B Sinv - i (dS) Sinv / eps, paired with psi' = S psi.
enum class TransformConvention { Ym, Author };

inline std::string to_string(SignConvention s) {
  return s == SignConvention::Minus ? "minus" : "plus";
}

inline std::string to_string(TransformConvention t) {
  return t == TransformConvention::Ym ? "ym" : "author";
}

inline SignConvention sign_convention_from_string(std::string_view s) {
  if (s == "minus") return SignConvention::Minus;
  if (s == "plus") return SignConvention::Plus;
  throw std::invalid_argument("sign convention must be 'minus' or 'plus'");
}

inline TransformConvention transform_convention_from_string(std::string_view s) {
  if (s == "ym") return TransformConvention::Ym;
  if (s == "author") return TransformConvention::Author;
  throw std::invalid_argument("transform convention must be 'ym' or 'author'");
}

}  // namespace gaugekit
