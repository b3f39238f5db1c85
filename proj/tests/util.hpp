#pragma once

#include "hv/algebra.hpp"
#include "hv/expr.hpp"
#include "oracle.hpp"

namespace testutil {

inline hv::Coefficient q(long n, long d = 1) { return hv::Coefficient(mpz_class(n), mpz_class(d)); }
inline hv::Element L(std::int64_t n) { return hv::Element(hv::BasisSymbol::L(n)); }
inline hv::Element I(std::int64_t n) { return hv::Element(hv::BasisSymbol::I(n)); }
inline hv::Element CL() { return hv::Element(hv::BasisSymbol::C_L()); }
inline hv::Element CLI() { return hv::Element(hv::BasisSymbol::C_LI()); }
inline hv::Element CI() { return hv::Element(hv::BasisSymbol::C_I()); }
inline hv::Element E(const char* text) { return hv::parse(text); }

inline oracle::Vec to_oracle(const hv::Element& x) {
  oracle::Vec v;
  for (const auto& [s, c] : x.terms()) v[{static_cast<int>(s.kind), static_cast<long>(s.index)}] = c.value();
  return v;
}

}  // namespace testutil

#ifdef DOCTEST_LIBRARY_INCLUDED
namespace doctest {
template <>
struct StringMaker<hv::Element> {
  static String convert(const hv::Element& x) { return hv::format(x).c_str(); }
};
template <>
struct StringMaker<hv::Coefficient> {
  static String convert(const hv::Coefficient& c) { return c.to_string().c_str(); }
};
}  // namespace doctest
#endif
