#include "seqgeom/rational.hpp"

#include <cctype>

#include "seqgeom/errors.hpp"

namespace seqgeom {

Sign sign_from_int(int v) {
  if (v < 0) return Sign::Neg;
  if (v > 0) return Sign::Pos;
  return Sign::Zero;
}

Sign sign_of(const Rat& v) { return sign_from_int(sgn(v)); }

std::string rat_to_string(const Rat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rat rat_from_string(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational literal");
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string num, den = "1";
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    num = std::string(text);
    if (!is_int(num)) throw ParseError("bad rational literal: " + num);
  } else {
    num = std::string(text.substr(0, slash));
    den = std::string(text.substr(slash + 1));
    if (!is_int(num) || !is_int(den)) throw ParseError("bad rational literal: " + std::string(text));
  }
  Rat v(num + "/" + den);
  if (v.get_den() == 0) throw ParseError("zero denominator: " + std::string(text));
  v.canonicalize();
  return v;
}

}  // namespace seqgeom
