#pragma once

#include <vector>

#include "qjfrac/serialize.hpp"

namespace qjfrac::testing {

/// A printed rational approximant with the index of its O(q^N) remainder.
struct PrintedApproximant {
  QRatFn f;
  int accurate_below;
  int h;  // depth whose approximant it is compared with
};

/// These expand as sum d(n+1) q^n, so they are shifted by one before comparison.
inline std::vector<PrintedApproximant> printed_divisor_approximants() {
  return {
      {parse_qratfn("(1+4*q+8*q^2+11*q^3+10*q^4)/(1+2*q+2*q^2-2*q^4)"), 5, 3},
      {parse_qratfn("(-1-5*q-14*q^2-29*q^3-46*q^4-62*q^5-71*q^6)"
                    "/(-1-3*q-6*q^2-8*q^3-7*q^4-4*q^5+q^6)"),
       7, 4},
      {parse_qratfn("(1+6*q+20*q^2+50*q^3+101*q^4+175*q^5+267*q^6+369*q^7+472*q^8)"
                    "/(1+4*q+10*q^2+19*q^3+29*q^4+37*q^5+40*q^6+38*q^7+32*q^8)"),
       8, 5},
  };
}

inline std::vector<PrintedApproximant> printed_sigma_approximants() {
  return {
      {parse_qratfn("q*(1+3*q+3*q^2)/((1-q)*(1+q))"), 4, 2},
      {parse_qratfn("q*(1+7*q+25*q^2+62*q^3+115*q^4)/((1+q+3*q^2)*(1+3*q+3*q^2))"), 6, 3},
      {parse_qratfn("q*(1+9*q+44*q^2+155*q^3+430*q^4+998*q^5+2000*q^6)"
                    "/(1+6*q+22*q^2+58*q^3+120*q^4+204*q^5+290*q^6+350*q^7)"),
       8, 4},
      {parse_qratfn("q*(1+11*q+65*q^2+276*q^3+935*q^4+2676*q^5+6696*q^6+14998*q^7+30592*q^8)"
                    "/(1+8*q+37*q^2+126*q^3+347*q^4+812*q^5+1664*q^6+3050*q^7+5079*q^8+7776*q^9)"),
       10, 5},
  };
}

/// Mod-5 reductions of the sigma approximants for h = 4, 5.
inline std::vector<PrintedApproximant> printed_mod5_sigma() {
  return {
      {parse_qratfn("(q+4*q^2+4*q^3+3*q^6)/(1+q+2*q^2+3*q^3+4*q^5)"), 8, 4},
      {parse_qratfn("(q+q^2+q^4+q^6+q^7+3*q^8+2*q^9)"
                    "/(1+3*q+2*q^2+q^3+2*q^4+2*q^5+4*q^6+4*q^8+q^9)"),
       10, 5},
  };
}

}  // namespace qjfrac::testing
